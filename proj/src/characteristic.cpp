#include "frozen/characteristic.hpp"

#include "frozen/errors.hpp"
#include "frozen/parallel.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <limits>
#include <optional>
#include <sstream>

namespace frozen {

namespace {

constexpr double kPi = std::numbers::pi;
constexpr double kSeriesRadius = 1e-3;
constexpr int kSeriesTerms = 8;

// (cos(rho s) - 1)/rho^2 = -2 (sin(rho s / 2)/rho)^2, series near rho = 0.
cplx cos_minus_one_kernel(cplx rho, double s) {
    if (std::abs(rho) < kSeriesRadius) {
        const cplx r2 = rho * rho;
        cplx term = -0.5 * s * s;
        cplx sum = term;
        for (int n = 2; n <= kSeriesTerms; ++n) {
            term *= -r2 * s * s / static_cast<double>((2 * n - 1) * (2 * n));
            sum += term;
        }
        return sum;
    }
    const cplx h = std::sin(0.5 * rho * s) / rho;
    return -2.0 * h * h;
}

// Integrals over [lo, hi) of the midpoint grid of q.
struct Moments {
    cplx sin_part;  // sum h q_i sin(rho (x - t_i))/rho
    cplx cos_part;  // sum h q_i cos(rho (x - t_i))
};

Moments volterra_moments(const GridFunction& q, std::size_t lo, std::size_t hi, cplx rho, double x) {
    Moments mom{0.0, 0.0};
    const double h = q.step();
    for (std::size_t i = lo; i < hi; ++i) {
        const double s = x - q.x(i);
        mom.sin_part += q[i] * sin_kernel(rho, s);
        mom.cos_part += q[i] * std::cos(rho * s);
    }
    mom.sin_part *= h;
    mom.cos_part *= h;
    return mom;
}

double spacing(int n, int alpha, int beta) {
    return reference_eigenvalue(n + 1, alpha, beta) - reference_eigenvalue(n, alpha, beta);
}

}  // namespace

double reference_eigenvalue(int n, int alpha, int beta) {
    if (alpha * beta == 1 && n == 1) return 0.0;
    const double shift = n - 0.5 * (alpha + beta);
    return shift * shift * kPi * kPi;
}

cplx sin_kernel(cplx rho, double s) {
    if (std::abs(rho) < kSeriesRadius) {
        const cplx r2 = rho * rho;
        cplx term = s;
        cplx sum = term;
        for (int n = 1; n < kSeriesTerms; ++n) {
            term *= -r2 * s * s / static_cast<double>((2 * n) * (2 * n + 1));
            sum += term;
        }
        return sum;
    }
    return std::sin(rho * s) / rho;
}

cplx reference_delta(int alpha, int beta, cplx lambda) {
    const cplx rho = std::sqrt(lambda);
    if (alpha == beta) {
        const cplx sinc = sin_kernel(rho, 1.0);
        return alpha == 0 ? sinc : lambda * sinc;
    }
    return (alpha == 0 ? 1.0 : -1.0) * std::cos(rho);
}

double reference_delta_slope(int n, int alpha, int beta) {
    const double sign_n = n % 2 == 0 ? 1.0 : -1.0;  // (-1)^n
    if (alpha == 0 && beta == 0) return sign_n / (2.0 * n * n * kPi * kPi);
    if (alpha == 1 && beta == 1) return n == 1 ? 1.0 : -sign_n / 2.0;
    const double rho = (n - 0.5) * kPi;
    const double sign_alpha = alpha == 0 ? 1.0 : -1.0;
    return sign_alpha * sign_n / (2.0 * rho);  // -(-1)^alpha (-1)^{n-1} / (2 rho)
}

cplx delta_direct(const GridFunction& q, const ProblemConfig& config, cplx lambda) {
    if (q.k() != config.k) throw InvalidInput("potential grid is not aligned with the frozen argument");
    const cplx rho = std::sqrt(lambda);
    const double a = config.a();
    const std::size_t ja = static_cast<std::size_t>(config.j) * q.m();

    // Left end x = 0: integrals over (0, a); right end x = 1: over (a, 1).
    const Moments left = volterra_moments(q, 0, ja, rho, 0.0);
    const Moments right = volterra_moments(q, ja, q.size(), rho, 1.0);

    // C(x) = cos rho(x-a) + int_a^x sin rho(x-t)/rho q dt, and its derivative.
    const cplx c0 = std::cos(rho * a) - left.sin_part;
    const cplx dc0 = lambda * sin_kernel(rho, a) - left.cos_part;
    const cplx c1 = std::cos(rho * (1.0 - a)) + right.sin_part;
    const cplx dc1 = -lambda * sin_kernel(rho, 1.0 - a) + right.cos_part;

    const cplx s0 = -sin_kernel(rho, a);
    const cplx ds0 = std::cos(rho * a);
    const cplx s1 = sin_kernel(rho, 1.0 - a);
    const cplx ds1 = std::cos(rho * (1.0 - a));

    const cplx left_c = config.alpha == 0 ? c0 : dc0;
    const cplx left_s = config.alpha == 0 ? s0 : ds0;
    const cplx right_c = config.beta == 0 ? c1 : dc1;
    const cplx right_s = config.beta == 0 ? s1 : ds1;
    return left_c * right_s - left_s * right_c;
}

cplx delta_from_w(const GridFunction& w, int alpha, int beta, cplx lambda) {
    const cplx rho = std::sqrt(lambda);
    const double h = w.step();
    if (alpha != beta) {
        cplx sum = 0.0;
        for (std::size_t i = 0; i < w.size(); ++i) sum += w[i] * sin_kernel(rho, w.x(i));
        return (alpha == 0 ? 1.0 : -1.0) * std::cos(rho) + h * sum;
    }
    if (alpha == 1) {
        cplx sum = 0.0;
        for (std::size_t i = 0; i < w.size(); ++i) sum += w[i] * std::cos(rho * w.x(i));
        return lambda * sin_kernel(rho, 1.0) + h * sum;
    }
    cplx sum = 0.0;
    cplx mean = 0.0;
    for (std::size_t i = 0; i < w.size(); ++i) {
        sum += w[i] * cos_minus_one_kernel(rho, w.x(i));
        mean += w[i];
    }
    cplx out = sin_kernel(rho, 1.0) + h * sum;
    if (std::abs(rho) >= kSeriesRadius) out += h * mean / lambda;
    return out;
}

cplx delta_from_spectrum(const Spectrum& spec, int n_used, cplx lambda) {
    if (n_used < 0 || static_cast<std::size_t>(n_used) > spec.count()) {
        throw InvalidInput("spectrum holds " + std::to_string(spec.count()) + " eigenvalues, " +
                           std::to_string(n_used) + " requested");
    }
    const int alpha = spec.alpha;
    const int beta = spec.beta;
    int coincident = 0;
    cplx product = 1.0;
    for (int n = 1; n <= n_used; ++n) {
        const double ref = reference_eigenvalue(n, alpha, beta);
        const cplx num = spec.eigenvalues[n - 1] - lambda;
        const cplx den = ref - lambda;
        if (coincident == 0 && std::abs(den) <= 1e-12 * std::max(1.0, ref)) {
            coincident = n;
            product *= num;
        } else {
            product *= num / den;
        }
    }
    if (coincident != 0) {
        // reference_delta(lambda) / (lambda_p^0 - lambda) -> -slope at the zero.
        return -reference_delta_slope(coincident, alpha, beta) * product;
    }
    return reference_delta(alpha, beta, lambda) * product;
}

cplx DeltaEvaluator::operator()(cplx lambda) const {
    return std::visit(
        [lambda](const auto& p) -> cplx {
            using T = std::decay_t<decltype(p)>;
            if constexpr (std::is_same_v<T, Direct>) {
                return delta_direct(p.q, p.config, lambda);
            } else if constexpr (std::is_same_v<T, FromW>) {
                return delta_from_w(p.w, p.alpha, p.beta, lambda);
            } else {
                return delta_from_spectrum(p.spectrum, p.n_used, lambda);
            }
        },
        payload_);
}

namespace {

template <typename F>
std::optional<cplx> newton(F&& f, cplx start, double max_step, const EigenOptions& opts) {
    cplx lam = start;
    double previous_step = std::numeric_limits<double>::infinity();
    for (int it = 0; it < opts.max_iter; ++it) {
        const double scale = std::max(1.0, std::abs(lam));
        const double h = 1e-6 * scale;
        const cplx value = f(lam);
        const cplx slope = (f(lam + h) - f(lam - h)) / (2.0 * h);
        if (!std::isfinite(std::abs(value)) || !std::isfinite(std::abs(slope))) return std::nullopt;
        if (value == cplx(0)) return lam;
        if (slope == cplx(0)) return std::nullopt;
        cplx step = value / slope;
        const double size = std::abs(step);
        if (size > max_step) step *= max_step / size;
        const bool residual_ok = std::abs(value) <= opts.residual_tol * std::abs(slope) * scale;
        lam -= step;
        if (size <= opts.step_tol * scale) return lam;
        // Rounding noise: the step stopped shrinking but the residual is already small.
        if (residual_ok && size >= 0.5 * previous_step) return lam;
        previous_step = size;
    }
    return std::nullopt;
}

template <typename F>
std::optional<cplx> secant(F&& f, cplx start, const EigenOptions& opts) {
    cplx x0 = start;
    cplx x1 = start + 1e-3 * std::max(1.0, std::abs(start));
    cplx f0 = f(x0);
    cplx f1 = f(x1);
    for (int it = 0; it < 2 * opts.max_iter; ++it) {
        if (f1 == f0) break;
        const cplx x2 = x1 - f1 * (x1 - x0) / (f1 - f0);
        if (std::abs(x2 - x1) <= opts.step_tol * std::max(1.0, std::abs(x2))) return x2;
        x0 = x1;
        f0 = f1;
        x1 = x2;
        f1 = f(x1);
    }
    return std::nullopt;
}

std::vector<int> colliding_indices(const std::vector<cplx>& roots, const std::vector<char>& ok) {
    std::vector<int> out;
    for (std::size_t a = 0; a < roots.size(); ++a) {
        if (!ok[a]) continue;
        for (std::size_t b = a + 1; b < roots.size(); ++b) {
            if (!ok[b]) continue;
            const double scale = std::max(1.0, std::abs(roots[a]));
            if (std::abs(roots[a] - roots[b]) <= 1e-8 * scale) {
                out.push_back(static_cast<int>(a));
                out.push_back(static_cast<int>(b));
            }
        }
    }
    std::sort(out.begin(), out.end());
    out.erase(std::unique(out.begin(), out.end()), out.end());
    return out;
}

}  // namespace

Spectrum eigenvalues(const GridFunction& q, const ProblemConfig& config, int n, const EigenOptions& opts) {
    if (n < 1) throw InvalidInput("eigenvalue count must be positive");
    const int alpha = config.alpha;
    const int beta = config.beta;
    auto delta = [&](cplx lam) { return delta_direct(q, config, lam); };
    auto max_step = [&](int idx) { return 0.5 * spacing(idx, alpha, beta); };

    std::vector<cplx> roots(n);
    std::vector<char> ok(n, 0);
    parallel_for(static_cast<std::size_t>(n), [&](std::size_t i) {
        const int idx = static_cast<int>(i) + 1;
        const cplx start = reference_eigenvalue(idx, alpha, beta);
        auto r = newton(delta, start, max_step(idx), opts);
        if (!r) r = secant(delta, start, opts);
        if (r) {
            roots[i] = *r;
            ok[i] = 1;
        }
    });

    // Continuation in the potential strength for failed or colliding indices:
    // Delta_t = (1-t) Delta_0 + t Delta_q has the reference zeros at t = 0.
    auto troubled = [&] {
        std::vector<int> bad = colliding_indices(roots, ok);
        for (int i = 0; i < n; ++i)
            if (!ok[i]) bad.push_back(i);
        std::sort(bad.begin(), bad.end());
        bad.erase(std::unique(bad.begin(), bad.end()), bad.end());
        return bad;
    };
    std::vector<int> bad = troubled();
    for (int round = 0, steps = opts.homotopy_steps; !bad.empty() && round < 3; ++round, steps *= 4) {
        parallel_for(bad.size(), [&](std::size_t b) {
            const int i = bad[b];
            const int idx = i + 1;
            cplx lam = reference_eigenvalue(idx, alpha, beta);
            bool good = true;
            for (int s = 1; s <= steps && good; ++s) {
                const double t = static_cast<double>(s) / steps;
                auto blended = [&](cplx x) { return (1.0 - t) * reference_delta(alpha, beta, x) + t * delta(x); };
                auto r = newton(blended, lam, max_step(idx), opts);
                if (r) {
                    lam = *r;
                } else {
                    good = false;
                }
            }
            roots[i] = lam;
            ok[i] = good ? 1 : 0;
        });
        bad = troubled();
    }
    if (!bad.empty()) {
        std::ostringstream os;
        os << "eigenvalue search failed or collided for indices";
        for (int i : bad) os << ' ' << i + 1;
        throw NumericalFailure("eigenvalues", os.str());
    }
    return Spectrum{alpha, beta, std::move(roots)};
}

std::vector<cplx> w_coefficients(const Spectrum& spec, int n_used, int modes) {
    if (modes < 1) throw InvalidInput("mode count must be positive");
    if (n_used > static_cast<int>(spec.count()) || n_used < modes) {
        throw InvalidInput("insufficient spectrum length: " + std::to_string(spec.count()) + " eigenvalues, n_used=" +
                           std::to_string(n_used) + ", modes=" + std::to_string(modes));
    }
    std::vector<cplx> coeffs(modes);
    const int alpha = spec.alpha;
    const int beta = spec.beta;
    if (alpha == beta) {
        for (int m = 0; m < modes; ++m) {
            const double lam = (kPi * m) * (kPi * m);
            if (alpha == 1) {
                coeffs[m] = delta_from_spectrum(spec, n_used, lam);
            } else {
                // rho^2 Delta - rho sin rho; the m = 0 limit is 0 for entire Delta.
                coeffs[m] = m == 0 ? cplx(0.0) : lam * delta_from_spectrum(spec, n_used, lam);
            }
        }
    } else {
        for (int m = 1; m <= modes; ++m) {
            const double rho = (m - 0.5) * kPi;
            coeffs[m - 1] = rho * delta_from_spectrum(spec, n_used, rho * rho);
        }
    }
    return coeffs;
}

GridFunction extract_w(const Spectrum& spec, int n_used, int modes, int k, int m) {
    const std::vector<cplx> coeffs = w_coefficients(spec, n_used, modes);
    return GridFunction::sample(k, m, [&](double x) {
        cplx sum = 0.0;
        if (spec.alpha == spec.beta) {
            sum = coeffs[0];
            for (int i = 1; i < modes; ++i) sum += 2.0 * coeffs[i] * std::cos(kPi * i * x);
        } else {
            for (int i = 1; i <= modes; ++i) sum += 2.0 * coeffs[i - 1] * std::sin((i - 0.5) * kPi * x);
        }
        return sum;
    });
}

}  // namespace frozen
