// One PASS/FAIL line per acceptance criterion; nonzero exit if any fails.

#include "frozen/characteristic.hpp"
#include "frozen/core_params.hpp"
#include "frozen/frozen_matrix.hpp"
#include "frozen/inverse_pipeline.hpp"
#include "frozen/main_equation.hpp"
#include "frozen/poly_roots.hpp"
#include "oracles.hpp"

#include <chrono>
#include <cstdio>
#include <fstream>
#include <functional>
#include <numeric>
#include <sstream>
#include <string>

using namespace frozen;

namespace tol {
constexpr double chebyshev_form_seconds = 5.0;
constexpr double reduction_seconds = 30.0;
constexpr double spectra = 1e-9;
constexpr double w_forms = 1e-14;
constexpr double w_round_trip = 1e-9;
constexpr double routes = 1e-6;
constexpr double routes_seconds = 60.0;
constexpr double pinning_delta = 1e-8;
constexpr double pinning_eigenvalue = 1e-7;
constexpr double isospectral = 1e-6;
constexpr double isospectral_seconds = 120.0;
constexpr double pipeline_slack = 1.10;
/// L2 error of the fixture potential rebuilt from 400 eigenvalues (measured 0.0456).
constexpr double pipeline_bound = 0.06;
}  // namespace tol

namespace {

constexpr double kPi = std::numbers::pi;

struct Outcome {
    bool passed = true;
    std::string detail;

    void fail(const std::string& what) {
        if (passed) detail = what;
        passed = false;
    }
};

class Timer {
public:
    [[nodiscard]] double seconds() const {
        return std::chrono::duration<double>(std::chrono::steady_clock::now() - start_).count();
    }

private:
    std::chrono::steady_clock::time_point start_ = std::chrono::steady_clock::now();
};

std::string fmt(const char* pattern, double a, double b = 0.0) {
    char buf[160];
    std::snprintf(buf, sizeof buf, pattern, a, b);
    return buf;
}

std::string describe(int a, int b, int j, int k) {
    return "(" + std::to_string(a) + "," + std::to_string(b) + ") j=" + std::to_string(j) + " k=" + std::to_string(k);
}

/// Normalized coprime configurations with 1 <= j <= k/2, plus j = 0 for k = 1 when asked.
std::vector<ProblemConfig> sweep(int kmin, int kmax, bool with_k1 = false) {
    std::vector<ProblemConfig> out;
    for (int a = 0; a < 2; ++a)
        for (int b = 0; b < 2; ++b) {
            if (with_k1) out.push_back(ProblemConfig{a, b, 0, 1});
            for (int k = std::max(kmin, 2); k <= kmax; ++k)
                for (int j = 1; 2 * j <= k; ++j)
                    if (std::gcd(j, k) == 1) out.push_back(ProblemConfig{a, b, j, k});
        }
    return out;
}

/// Degeneracy read off the flag parities directly.
bool degenerate_by_parity(int a, int b, int j, int k) {
    if (a == 0 && b == 0) return true;
    if (a == 0) return j % 2 == 0;
    if (b == 0) return (j + k) % 2 == 0;
    return k % 2 == 0;
}

oracle::Dense exact_dense(const IntMatrix& m) { return oracle::to_dense(m); }

Outcome chebyshev_form() {
    Outcome o;
    Timer t;
    std::vector<IntPolynomial> polys;
    for (int k = 2; k <= 40; ++k)
        for (int a = 0; a < 2; ++a)
            for (int b = 0; b < 2; ++b) {
                polys.push_back(char_poly_j1(k, a, b));
                if (polys.back() != theorem1_poly(k, a, b)) o.fail("Chebyshev form differs at " + describe(a, b, 1, k));
            }
    const double s = t.seconds();
    if (s >= tol::chebyshev_form_seconds) o.fail(fmt("took %.2f s", s));
    std::size_t i = 0;
    for (int k = 2; k <= 40; ++k)
        for (int a = 0; a < 2; ++a)
            for (int b = 0; b < 2; ++b)
                if (polys[i++].coeffs() != oracle::faddeev_leverrier(oracle::rule_matrix(a, b, 1, k)))
                    o.fail("characteristic polynomial differs from the matrix at " + describe(a, b, 1, k));
    if (o.passed) o.detail = fmt("%.0f polynomials, %.3f s", static_cast<double>(polys.size()), s);
    return o;
}

Outcome reduction() {
    Outcome o;
    Timer t;
    int count = 0;
    for (const ProblemConfig& c : sweep(2, 24)) {
        const IntMatrix a = build_matrix(c).entries;
        if (exact_dense(a) != oracle::rule_matrix(c.alpha, c.beta, c.j, c.k))
            o.fail("matrix rules at " + describe(c.alpha, c.beta, c.j, c.k));
        if (reduce_to_j1(c) != a) o.fail("reduction at " + describe(c.alpha, c.beta, c.j, c.k));
        if (c.j == 2 && j2_identity_rhs(c.k, c.alpha, c.beta) != a)
            o.fail("two-step identity at " + describe(c.alpha, c.beta, c.j, c.k));
        ++count;
    }
    const double s = t.seconds();
    if (s >= tol::reduction_seconds) o.fail(fmt("took %.2f s", s));
    if (o.passed) o.detail = std::to_string(count) + " configurations, " + fmt("%.2f s", s);
    return o;
}

Outcome determinants() {
    Outcome o;
    for (int k = 2; k <= 40; ++k)
        for (int a = 0; a < 2; ++a)
            for (int b = 0; b < 2; ++b)
                if (det_closed_form(k, a, b) != oracle::det(oracle::rule_matrix(a, b, 1, k)))
                    o.fail("closed form at " + describe(a, b, 1, k));
    int singular = 0;
    int total = 0;
    for (const ProblemConfig& c : sweep(2, 24, true)) {
        const bool zero = oracle::det(oracle::rule_matrix(c.alpha, c.beta, c.j, c.k)) == 0;
        const bool deg = degenerate_by_parity(c.alpha, c.beta, c.j, c.k);
        if (zero != deg) o.fail("singularity vs parity at " + describe(c.alpha, c.beta, c.j, c.k));
        if (classify(c).degenerate() != deg) o.fail("classification at " + describe(c.alpha, c.beta, c.j, c.k));
        singular += zero;
        ++total;
    }
    if (o.passed) o.detail = std::to_string(singular) + " of " + std::to_string(total) + " singular";
    return o;
}

Outcome kernels() {
    Outcome o;
    for (const ProblemConfig& c : sweep(2, 24, true)) {
        const IntMatrix a = build_matrix(c).entries;
        const int r = oracle::rank(oracle::rule_matrix(c.alpha, c.beta, c.j, c.k));
        const KernelDescriptor kd = kernel(c);
        const std::string where = describe(c.alpha, c.beta, c.j, c.k);
        if (degenerate_by_parity(c.alpha, c.beta, c.j, c.k)) {
            if (r != c.k - 1) o.fail("rank at " + where);
            if (kd.dimension != 1 || kd.generator.size() != static_cast<std::size_t>(c.k)) {
                o.fail("kernel shape at " + where);
                continue;
            }
            const std::vector<BigInt> x(kd.generator.begin(), kd.generator.end());
            for (const BigInt& v : x)
                if (v != 1 && v != -1) o.fail("generator entries at " + where);
            for (const BigInt& v : a.apply(x))
                if (v != 0) o.fail("A X != 0 at " + where);
        } else {
            if (r != c.k || kd.dimension != 0) o.fail("nontrivial kernel at " + where);
        }
    }
    int eigen_count = 0;
    for (int k = 2; k <= 20; ++k)
        for (int a = 0; a < 2; ++a)
            for (int b = 0; b < 2; ++b) {
                if (a == 0 && b == 1) continue;
                const Eigen::MatrixXcd m = build_matrix(make_config(a, b, 1, k)).to_complex();
                for (const cplx z : spectrum_closed_form(k, a, b)) {
                    const Eigen::MatrixXcd shifted = m - z * Eigen::MatrixXcd::Identity(k, k);
                    if (numeric_rank(shifted) != k - 1) o.fail("geometric multiplicity at " + describe(a, b, 1, k));
                    ++eigen_count;
                }
            }
    if (o.passed) o.detail = std::to_string(eigen_count) + " eigenvalues simple";
    return o;
}

Outcome spectra() {
    Outcome o;
    double worst = 0.0;
    for (int k = 2; k <= 20; ++k)
        for (int a = 0; a < 2; ++a)
            for (int b = 0; b < 2; ++b) {
                const IntPolynomial p = char_poly_j1(k, a, b);
                if (a == 0 && b == 1) {
                    if (boost::multiprecision::abs(p[0]) < 1) o.fail("p(0) = 0 at k=" + std::to_string(k));
                    continue;
                }
                const auto roots = polynomial_roots(p);
                const auto closed = spectrum_closed_form(k, a, b);
                const double d = multiset_distance(roots, closed);
                worst = std::max(worst, d);
                if (d > tol::spectra) o.fail(describe(a, b, 1, k) + fmt(" distance %.3g", d));
            }
    if (o.passed) o.detail = fmt("max distance %.3g", worst);
    return o;
}

Outcome main_equation() {
    Outcome o;
    std::mt19937_64 rng(20240611);
    double forms = 0.0;
    double trip = 0.0;
    for (const ProblemConfig& c : sweep(1, 12, true)) {
        const std::string where = describe(c.alpha, c.beta, c.j, c.k);
        for (int rep = 0; rep < 20; ++rep) {
            const GridFunction q = oracle::random_grid(c.k, 12, rng);
            const GridFunction direct = forward_w_direct(q, c);
            const GridFunction matrix = forward_w_matrix(q, c);
            const double d = (direct - matrix).sup_norm();
            forms = std::max(forms, d);
            if (d > tol::w_forms) o.fail("forms differ at " + where + fmt(" by %.3g", d));
            if (rep == 0) {
                const double a = static_cast<double>(c.j) / c.k;
                for (int p = 0; p < 5; ++p) {
                    const double x = (p + 0.37) / 5.0;
                    auto smooth = [](double t) { return oracle::smooth_potential(t); };
                    const GridFunction g = GridFunction::sample(c.k, 40, smooth);
                    const std::size_t i = static_cast<std::size_t>(x * static_cast<double>(g.size()));
                    const cplx ref = oracle::w_pointwise(smooth, c.alpha, c.beta, a, g.x(i));
                    if (std::abs(forward_w_direct(g, c)[i] - ref) > 1e-12) o.fail("pointwise formula at " + where);
                }
            }
            if (!degenerate_by_parity(c.alpha, c.beta, c.j, c.k)) {
                const GridFunction back = solve_inverse(direct, c).particular;
                const double e = (forward_w_direct(back, c) - direct).sup_norm() / std::max(1.0, direct.sup_norm());
                trip = std::max(trip, e);
                if (e > tol::w_round_trip) o.fail("round trip at " + where + fmt(" %.3g", e));
            }
        }
    }
    if (o.passed) o.detail = fmt("forms %.3g, round trip %.3g", forms, trip);
    return o;
}

std::vector<cplx> lambda_grid(double top) {
    std::vector<cplx> out;
    for (int i = 0; i < 40; ++i) out.emplace_back(-50.0 + (top + 50.0) * i / 39.0, (i % 4) * 7.5 - 10.0);
    return out;
}

Outcome routes() {
    Outcome o;
    Timer t;
    const auto grid = lambda_grid(2000.0);
    double worst = 0.0;
    for (const ProblemConfig& c : sweep(1, 8, true)) {
        const GridFunction q = GridFunction::sample(c.k, 512, oracle::smooth_potential);
        const GridFunction w = forward_w_direct(q, c);
        for (const cplx lam : grid) {
            const cplx d = delta_direct(q, c, lam);
            const cplx e = delta_from_w(w, c.alpha, c.beta, lam);
            const double scale = std::max({std::abs(d), std::abs(reference_delta(c.alpha, c.beta, lam)), 1e-12});
            const double rel = std::abs(d - e) / scale;
            worst = std::max(worst, rel);
            if (rel > tol::routes) o.fail(describe(c.alpha, c.beta, c.j, c.k) + fmt(" at lambda=%.4g: %.3g", lam.real(), rel));
        }
    }
    const double s = t.seconds();
    if (s >= tol::routes_seconds) o.fail(fmt("took %.2f s", s));
    if (o.passed) o.detail = fmt("max relative gap %.3g, %.2f s", worst, s);
    return o;
}

Outcome pinning() {
    Outcome o;
    std::mt19937_64 rng(777);
    double worst_delta = 0.0;
    double worst_eig = 0.0;
    for (int k : {2, 3, 5}) {
        const ProblemConfig c = make_config(0, 0, 1, k);
        const GridFunction q = oracle::random_grid(k, 64, rng);
        const double top = std::pow(kPi * k * 5.5, 2);
        double peak = 0.0;
        for (const cplx lam : lambda_grid(top)) peak = std::max(peak, std::abs(delta_direct(q, c, lam)));
        const Spectrum s = eigenvalues(q, c, 5 * k);
        for (int n = 1; n <= 5; ++n) {
            const double lam = std::pow(kPi * k * n, 2);
            const double ratio = std::abs(delta_direct(q, c, lam)) / peak;
            worst_delta = std::max(worst_delta, ratio);
            if (ratio > tol::pinning_delta) o.fail(fmt("|Delta|/max = %.3g at k=%.0f", ratio, k));
            const double rel = std::abs(s.eigenvalues[k * n - 1] - lam) / lam;
            worst_eig = std::max(worst_eig, rel);
            if (rel > tol::pinning_eigenvalue) o.fail(fmt("eigenvalue off by %.3g at k=%.0f", rel, k));
        }
    }
    if (o.passed) o.detail = fmt("|Delta| ratio %.3g, eigenvalue %.3g", worst_delta, worst_eig);
    return o;
}

Outcome isospectral() {
    Outcome o;
    Timer t;
    double worst = 0.0;
    constexpr int m = 64;
    for (ExampleId id : {ExampleId::I7, ExampleId::II, ExampleId::III, ExampleId::IV}) {
        const ProblemConfig c = example_config(id);
        const GridFunction q0 = GridFunction::sample(c.k, m, oracle::smooth_potential);
        const GridFunction q1 = algorithm1(q0, c, paper_profile_samples(c.k, m));
        if ((q1 - q0).sup_norm() < 1e-3) o.fail(std::string(to_string(id)) + ": partner equals the base potential");
        const Spectrum s0 = eigenvalues(q0, c, 30);
        const Spectrum s1 = eigenvalues(q1, c, 30);
        for (int n = 0; n < 30; ++n) {
            const double rel = std::abs(s0.eigenvalues[n] - s1.eigenvalues[n]) / std::max(1.0, std::abs(s0.eigenvalues[n]));
            worst = std::max(worst, rel);
            if (rel > tol::isospectral) o.fail(std::string(to_string(id)) + fmt(": eigenvalue %.0f off by %.3g", n + 1, rel));
        }
    }
    const double s = t.seconds();
    if (s >= tol::isospectral_seconds) o.fail(fmt("took %.2f s", s));
    if (o.passed) o.detail = fmt("max relative gap %.3g, %.2f s", worst, s);
    return o;
}

Outcome golden_tables() {
    Outcome o;
    for (ExampleId id : {ExampleId::I7, ExampleId::I8, ExampleId::II, ExampleId::III, ExampleId::IV}) {
        std::ifstream in(std::string(FROZEN_GOLDEN_DIR) + "/" + std::string(to_string(id)) + ".txt");
        std::stringstream ss;
        ss << in.rdbuf();
        if (!in.good() && ss.str().empty()) {
            o.fail("missing table " + std::string(to_string(id)));
            continue;
        }
        if (reproduce_example(id).table_text() != ss.str()) o.fail("table " + std::string(to_string(id)) + " differs");
    }
    if (o.passed) o.detail = "5 tables";
    return o;
}

Outcome pipeline() {
    Outcome o;
    const ProblemConfig c = make_config(0, 1, 1, 3);
    const Spectrum s = eigenvalues(GridFunction::sample(3, 512, oracle::smooth_potential), c, 400);
    const GridFunction truth = GridFunction::sample(3, 256, oracle::smooth_potential);
    std::vector<double> errors;
    for (int n : {50, 100, 200, 400}) {
        PipelineOptions opts;
        opts.m = 256;
        opts.n_used = n;
        opts.modes = n / 4;
        errors.push_back((invert_from_spectrum(s, c, opts).particular - truth).l2_norm());
    }
    for (std::size_t i = 1; i < errors.size(); ++i)
        if (errors[i] > tol::pipeline_slack * errors[i - 1]) o.fail(fmt("error rose from %.4g to %.4g", errors[i - 1], errors[i]));
    if (errors.back() >= tol::pipeline_bound) o.fail(fmt("error %.4g above bound %.4g", errors.back(), tol::pipeline_bound));
    std::string d = "L2 errors";
    for (double e : errors) d += fmt(" %.4g", e);
    if (o.passed) o.detail = d;
    else o.detail += " (" + d + ")";
    return o;
}

}  // namespace

int main() {
    const std::vector<std::pair<std::string, std::function<Outcome()>>> criteria{
        {"exact Chebyshev form of det(zI - A_{1,k})", chebyshev_form},
        {"A_{j,k} as a polynomial in A_{1,k}", reduction},
        {"determinant closed form and singular classes", determinants},
        {"rank, kernel generator and geometric multiplicity", kernels},
        {"trigonometric spectra of A_{1,k}", spectra},
        {"W by formula and by matrix, round trip", main_equation},
        {"characteristic function by two routes", routes},
        {"pinned eigenvalues (pi k n)^2", pinning},
        {"iso-spectral partners", isospectral},
        {"worked example tables", golden_tables},
        {"spectrum to potential convergence", pipeline},
    };
    int failed = 0;
    int index = 0;
    for (const auto& [name, run] : criteria) {
        ++index;
        Outcome o;
        try {
            o = run();
        } catch (const std::exception& e) {
            o.fail(std::string("exception: ") + e.what());
        }
        failed += !o.passed;
        std::printf("%s %2d %s: %s\n", o.passed ? "PASS" : "FAIL", index, name.c_str(), o.detail.c_str());
        std::fflush(stdout);
    }
    std::printf("%d of %zu criteria passed\n", static_cast<int>(criteria.size()) - failed, criteria.size());
    return failed == 0 ? 0 : 1;
}
