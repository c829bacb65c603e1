#include "frozen/inverse_pipeline.hpp"

#include "frozen/errors.hpp"
#include "frozen/frozen_matrix.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <numeric>
#include <sstream>

namespace frozen {

namespace {

std::string fraction(int p, int q) {
    if (p == 0) return "0";
    const int g = std::gcd(p, q);
    p /= g;
    q /= g;
    if (q == 1) return std::to_string(p);
    return std::to_string(p) + "/" + std::to_string(q);
}

void check_profile(const GridFunction& q0, std::span<const cplx> f) {
    if (f.size() != static_cast<std::size_t>(q0.m())) {
        throw InvalidInput("supplement has " + std::to_string(f.size()) + " samples, the grid needs " +
                           std::to_string(q0.m()) + " per subinterval");
    }
}

}  // namespace

GridFunction IsoSpectralFamily::generator(std::span<const cplx> f) const {
    check_profile(base, f);
    return r_inverse(lift(kernel_vector, f), config.j);
}

IsoSpectralFamily make_family(const GridFunction& q0, const ProblemConfig& config) {
    if (!config.normalized()) throw InvalidInput("iso-spectral families need a normalized configuration (2j <= k)");
    if (!classify(config).degenerate()) {
        throw InvalidInput("configuration is non-degenerate: the potential is unique and no iso-spectral family exists");
    }
    if (q0.k() != config.k) throw InvalidInput("potential grid is not aligned with the frozen argument");
    return IsoSpectralFamily{q0, config, kernel(config).generator};
}

GridFunction algorithm1(const GridFunction& q0, const ProblemConfig& config, std::span<const cplx> f) {
    return make_family(q0, config).member(f);
}

double paper_profile(double t, int k) {
    const double b = 1.0 / k;
    return 10.0 * t / (3.0 * b) - 25.0 * t * t / (9.0 * b * b);
}

std::vector<cplx> paper_profile_samples(int k, int m) {
    std::vector<cplx> out(m);
    const double b = 1.0 / k;
    for (int p = 0; p < m; ++p) out[p] = paper_profile((p + 0.5) * b / m, k);
    return out;
}

std::string PiecewiseRow::to_string() const {
    return (sign < 0 ? "-f(" : "f(") + argument + ") on " + interval;
}

std::vector<PiecewiseRow> symbolic_table(const ProblemConfig& config, std::span<const int> x) {
    const int k = config.k;
    if (x.size() != static_cast<std::size_t>(k)) throw InvalidInput("kernel vector length differs from k");
    const auto segments = r_segments(config.j, k);
    std::vector<PiecewiseRow> rows(k);
    for (int v = 1; v <= k; ++v) {
        const auto [source, reversed] = segments[v - 1];
        PiecewiseRow& row = rows[source];
        row.sign = x[v - 1];
        if (reversed) {
            const int right = source + 1;
            row.argument = (right == k ? std::string("1") : fraction(right, k)) + "-x";
        } else {
            row.argument = source == 0 ? std::string("x") : "x-" + fraction(source, k);
        }
        row.interval = "(" + fraction(source, k) + "," + fraction(source + 1, k) + ")";
    }
    return rows;
}

std::string_view to_string(ExampleId id) {
    switch (id) {
        case ExampleId::I7: return "I7";
        case ExampleId::I8: return "I8";
        case ExampleId::II: return "II";
        case ExampleId::III: return "III";
        case ExampleId::IV: return "IV";
    }
    return "?";
}

ExampleId parse_example_id(std::string_view name) {
    for (ExampleId id : {ExampleId::I7, ExampleId::I8, ExampleId::II, ExampleId::III, ExampleId::IV})
        if (to_string(id) == name) return id;
    throw InvalidInput("unknown example '" + std::string(name) + "' (expected I7, I8, II, III or IV)");
}

ProblemConfig example_config(ExampleId id) {
    switch (id) {
        case ExampleId::I7: return make_config(0, 0, 3, 7);
        case ExampleId::I8: return make_config(0, 0, 3, 8);
        case ExampleId::II: return make_config(0, 1, 2, 7);
        case ExampleId::III: return make_config(1, 0, 3, 7);
        case ExampleId::IV: return make_config(1, 1, 3, 8);
    }
    throw InvalidInput("unknown example");
}

std::string ExampleReport::table_text() const {
    std::string out;
    for (const auto& row : table) out += row.to_string() + "\n";
    return out;
}

ExampleReport reproduce_example(ExampleId id, int m) {
    const ProblemConfig config = example_config(id);
    const KernelDescriptor ker = kernel(config);
    const auto f = paper_profile_samples(config.k, m);
    return ExampleReport{id, config, ker.generator, symbolic_table(config, ker.generator),
                         r_inverse(lift(ker.generator, f), config.j)};
}

std::string render_svg(const ExampleReport& report) {
    constexpr double width = 640.0;
    constexpr double height = 320.0;
    constexpr double pad = 32.0;
    const GridFunction& g = report.samples;
    double lo = 0.0;
    double hi = 0.0;
    for (const cplx& v : g.values()) {
        lo = std::min(lo, v.real());
        hi = std::max(hi, v.real());
    }
    if (hi - lo < 1e-12) hi = lo + 1.0;
    auto px = [&](double x) { return pad + x * (width - 2 * pad); };
    auto py = [&](double y) { return height - pad - (y - lo) / (hi - lo) * (height - 2 * pad); };

    std::ostringstream os;
    os.setf(std::ios::fixed);
    os.precision(2);
    os << "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"" << width << "\" height=\"" << height << "\">\n";
    os << "<rect width=\"100%\" height=\"100%\" fill=\"white\"/>\n";
    for (int s = 0; s <= report.config.k; ++s) {
        const double x = px(static_cast<double>(s) / report.config.k);
        os << "<line x1=\"" << x << "\" y1=\"" << pad << "\" x2=\"" << x << "\" y2=\"" << height - pad
           << "\" stroke=\"#ccc\"/>\n";
    }
    os << "<line x1=\"" << px(0) << "\" y1=\"" << py(0) << "\" x2=\"" << px(1) << "\" y2=\"" << py(0)
       << "\" stroke=\"black\"/>\n";
    // One polyline per subinterval so the jumps stay visible.
    const std::size_t m = static_cast<std::size_t>(g.m());
    for (int s = 0; s < g.k(); ++s) {
        os << "<polyline fill=\"none\" stroke=\"#1f4e9c\" stroke-width=\"1.5\" points=\"";
        for (std::size_t p = 0; p < m; ++p) {
            const std::size_t i = s * m + p;
            os << px(g.x(i)) << ',' << py(g[i].real()) << (p + 1 < m ? " " : "");
        }
        os << "\"/>\n";
    }
    os << "<text x=\"" << pad << "\" y=\"" << pad / 2 + 4 << "\" font-family=\"sans-serif\" font-size=\"13\">"
       << "Example " << to_string(report.id) << ": alpha=" << report.config.alpha << ", beta=" << report.config.beta
       << ", j=" << report.config.j << ", k=" << report.config.k << "</text>\n";
    os << "</svg>\n";
    return os.str();
}

double asymptotic_drift(const Spectrum& spec, int n_used) {
    n_used = std::min<int>(n_used, static_cast<int>(spec.count()));
    double drift = 0.0;
    for (int n = std::max(1, n_used - n_used / 4); n <= n_used; ++n) {
        const double ref = reference_eigenvalue(n, spec.alpha, spec.beta);
        const double gap = reference_eigenvalue(n + 1, spec.alpha, spec.beta) - ref;
        drift = std::max(drift, std::abs(spec.eigenvalues[n - 1] - ref) / gap);
    }
    return drift;
}

namespace {

// The spectrum relabelled for the normalized problem; eigenvalues are unchanged.
Spectrum normalized_spectrum(const Spectrum& spec, const ProblemConfig& config, ProblemConfig& normalized,
                             bool& reflected) {
    if (spec.alpha != config.alpha || spec.beta != config.beta) {
        throw InvalidInput("spectrum boundary flags differ from the configuration");
    }
    std::tie(normalized, reflected) = normalize_to_half(config);
    return Spectrum{normalized.alpha, normalized.beta, spec.eigenvalues};
}

}  // namespace

GridFunction w_from_spectrum(const Spectrum& spec, const ProblemConfig& config, const PipelineOptions& opts) {
    ProblemConfig normalized;
    bool reflected = false;
    const Spectrum relabelled = normalized_spectrum(spec, config, normalized, reflected);
    if (spec.count() < static_cast<std::size_t>(opts.n_used)) {
        throw InvalidInput("insufficient spectrum length: " + std::to_string(spec.count()) + " eigenvalues, n_used=" +
                           std::to_string(opts.n_used));
    }
    const double drift = asymptotic_drift(relabelled, opts.n_used);
    if (drift > 0.25) {
        std::ostringstream os;
        os << "eigenvalues drift " << drift << " spacings from the asymptotics of (alpha,beta)=(" << spec.alpha
           << ',' << spec.beta << ")";
        throw NumericalFailure("asymptotics", os.str());
    }
    return extract_w(relabelled, opts.n_used, opts.modes, normalized.k, opts.m);
}

MainEqSolution invert_from_spectrum(const Spectrum& spec, const ProblemConfig& config, const PipelineOptions& opts) {
    const auto [normalized, reflected] = normalize_to_half(config);
    const GridFunction w = w_from_spectrum(spec, config, opts);
    MainEqSolution sol = solve_inverse(w, normalized, SolveMethod::Auto, opts.consistency_tol);
    if (reflected) {
        sol.particular = sol.particular.reflected();
        if (sol.kernel_generator) sol.kernel_generator = sol.kernel_generator->reflected();
    }
    return sol;
}

}  // namespace frozen
