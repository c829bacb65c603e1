#include "frozen/poly_roots.hpp"

#include "frozen/errors.hpp"

#include <boost/multiprecision/cpp_bin_float.hpp>
#include <boost/multiprecision/cpp_complex.hpp>

#include <algorithm>
#include <cmath>
#include <limits>
#include <numbers>

namespace frozen {

namespace {

using cplx = std::complex<double>;
using lcplx = std::complex<long double>;
using mp_real = boost::multiprecision::cpp_bin_float_50;
using mp_cplx = boost::multiprecision::cpp_complex_50;

template <typename C>
std::pair<C, C> eval_with_derivative(const std::vector<C>& coeffs, const C& z) {
    C p(0), dp(0);
    for (auto it = coeffs.rbegin(); it != coeffs.rend(); ++it) {
        dp = dp * z + p;
        p = p * z + *it;
    }
    return {p, dp};
}

// Rounding-error bound of Horner's rule at z.
template <typename C, typename R>
R horner_noise(const std::vector<C>& coeffs, const C& z) {
    using std::abs;
    const R r = abs(z);
    R acc(0);
    for (auto it = coeffs.rbegin(); it != coeffs.rend(); ++it) acc = acc * r + R(abs(*it));
    return R(4 * coeffs.size()) * std::numeric_limits<R>::epsilon() * acc;
}

// Simultaneous Aberth-Ehrlich iteration. A root is settled once its step is
// below tol or |p| is within the evaluation noise.
template <typename C, typename R>
bool aberth_iterate(const std::vector<C>& c, std::vector<C>& z, R tol, int max_iter) {
    using std::abs;
    const std::size_t n = z.size();
    std::vector<bool> done(n, false);
    for (int iter = 0; iter < max_iter; ++iter) {
        bool all_done = true;
        for (std::size_t i = 0; i < n; ++i) {
            if (done[i]) continue;
            auto [p, dp] = eval_with_derivative(c, z[i]);
            if (R(abs(p)) <= horner_noise<C, R>(c, z[i])) {
                done[i] = true;
                continue;
            }
            const C ratio = p / dp;
            C repulsion(0);
            for (std::size_t k = 0; k < n; ++k) {
                if (k != i) repulsion += C(1) / (z[i] - z[k]);
            }
            const C step = ratio / (C(1) - ratio * repulsion);
            z[i] -= step;
            const R scale = R(abs(z[i])) > R(1) ? R(abs(z[i])) : R(1);
            if (R(abs(step)) <= tol * scale) {
                done[i] = true;
            } else {
                all_done = false;
            }
        }
        if (all_done) return true;
    }
    return false;
}

std::vector<cplx> initial_circle(const std::vector<cplx>& c) {
    const std::size_t n = c.size() - 1;
    // Fujiwara-type bound for the initial circle.
    double radius = 0.0;
    for (std::size_t i = 0; i < n; ++i) {
        radius = std::max(radius, std::pow(std::abs(c[i] / c[n]), 1.0 / static_cast<double>(n - i)));
    }
    radius = std::max(2.0 * radius, 1e-3);
    std::vector<cplx> z(n);
    for (std::size_t i = 0; i < n; ++i) {
        const double angle = 2.0 * std::numbers::pi * (i + 0.25) / static_cast<double>(n) + 0.4;
        z[i] = std::polar(radius * 0.5, angle);
    }
    return z;
}

bool lex_less(cplx a, cplx b) {
    return a.real() < b.real() || (a.real() == b.real() && a.imag() < b.imag());
}

}  // namespace

std::vector<cplx> aberth_roots(std::span<const cplx> coeffs, double tol, int max_iter) {
    std::size_t end = coeffs.size();
    while (end > 0 && coeffs[end - 1] == cplx(0)) --end;
    if (end == 0) throw InvalidInput("roots of the zero polynomial are undefined");
    const std::vector<cplx> c(coeffs.begin(), coeffs.begin() + end);
    if (c.size() == 1) return {};

    std::vector<cplx> z = initial_circle(c);
    if (!aberth_iterate<cplx, double>(c, z, tol, max_iter)) {
        throw NumericalFailure("aberth", "Aberth iteration did not converge");
    }

    // A few Newton steps in extended precision.
    const std::vector<lcplx> lc(c.begin(), c.end());
    for (auto& root : z) {
        lcplx w(root.real(), root.imag());
        for (int k = 0; k < 3; ++k) {
            auto [p, dp] = eval_with_derivative(lc, w);
            if (dp == lcplx(0)) break;
            w -= p / dp;
        }
        if (std::isfinite(static_cast<double>(w.real())) && std::isfinite(static_cast<double>(w.imag()))) {
            root = cplx(static_cast<double>(w.real()), static_cast<double>(w.imag()));
        }
    }
    std::sort(z.begin(), z.end(), lex_less);
    return z;
}

std::vector<cplx> polynomial_roots(const IntPolynomial& p) {
    const auto& c = p.coeffs();
    if (c.empty()) throw InvalidInput("roots of the zero polynomial are undefined");
    std::size_t zeros = 0;
    while (zeros < c.size() && c[zeros] == 0) ++zeros;
    std::vector<cplx> reduced;
    std::vector<mp_cplx> exact;
    for (std::size_t i = zeros; i < c.size(); ++i) {
        reduced.emplace_back(c[i].convert_to<double>());
        exact.emplace_back(mp_real(c[i]));
    }
    std::vector<cplx> roots;
    if (reduced.size() > 1) {
        // Double precision start; its convergence flag is irrelevant because
        // the refinement below decides.
        std::vector<cplx> z = initial_circle(reduced);
        aberth_iterate<cplx, double>(reduced, z, 1e-15, 500);
        std::vector<mp_cplx> w(z.begin(), z.end());
        if (!aberth_iterate<mp_cplx, mp_real>(exact, w, mp_real("1e-40"), 200)) {
            throw NumericalFailure("aberth", "Aberth refinement did not converge");
        }
        for (const auto& r : w) roots.emplace_back(r.real().convert_to<double>(), r.imag().convert_to<double>());
    }
    roots.insert(roots.end(), zeros, cplx(0.0));
    std::sort(roots.begin(), roots.end(), lex_less);
    return roots;
}

double hausdorff_distance(std::span<const cplx> a, std::span<const cplx> b) {
    auto directed = [](std::span<const cplx> from, std::span<const cplx> to) {
        double worst = 0.0;
        for (cplx x : from) {
            double best = std::numeric_limits<double>::infinity();
            for (cplx y : to) best = std::min(best, std::abs(x - y));
            worst = std::max(worst, best);
        }
        return worst;
    };
    return std::max(directed(a, b), directed(b, a));
}

double multiset_distance(std::span<const cplx> a, std::span<const cplx> b) {
    if (a.size() != b.size()) return std::numeric_limits<double>::infinity();
    std::vector<bool> used(b.size(), false);
    double worst = 0.0;
    for (cplx x : a) {
        std::size_t best_idx = b.size();
        double best = std::numeric_limits<double>::infinity();
        for (std::size_t i = 0; i < b.size(); ++i) {
            if (used[i]) continue;
            const double dist = std::abs(x - b[i]);
            if (dist < best) {
                best = dist;
                best_idx = i;
            }
        }
        used[best_idx] = true;
        worst = std::max(worst, best);
    }
    return worst;
}

}  // namespace frozen
