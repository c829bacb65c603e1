#include "frozen/frozen_matrix.hpp"

#include "frozen/chebyshev.hpp"
#include "frozen/errors.hpp"
#include "frozen/poly_roots.hpp"

#include <cmath>
#include <numbers>
#include <stdexcept>
#include <string>

namespace frozen {

namespace {

void require_k2(int k) {
    if (k < 2) throw InvalidInput("this operation requires k >= 2, got " + std::to_string(k));
}

// Polynomial with Gaussian-integer coefficients, kept as real and imaginary parts.
struct GaussPoly {
    IntPolynomial re;
    IntPolynomial im;
};

// P(-i z) for an integer polynomial P.
GaussPoly substitute_minus_i(const IntPolynomial& p) {
    std::vector<BigInt> re(p.coeffs().size()), im(p.coeffs().size());
    for (std::size_t m = 0; m < p.coeffs().size(); ++m) {
        const BigInt& v = p.coeffs()[m];
        switch (m % 4) {
            case 0: re[m] = v; break;
            case 1: im[m] = -v; break;
            case 2: re[m] = -v; break;
            case 3: im[m] = v; break;
        }
    }
    return {IntPolynomial(std::move(re)), IntPolynomial(std::move(im))};
}

GaussPoly times_i_power(const GaussPoly& g, int power) {
    switch (((power % 4) + 4) % 4) {
        case 0: return g;
        case 1: return {IntPolynomial{} - g.im, g.re};
        case 2: return {IntPolynomial{} - g.re, IntPolynomial{} - g.im};
        default: return {g.im, IntPolynomial{} - g.re};
    }
}

IntPolynomial real_part_checked(const GaussPoly& g) {
    if (!g.im.is_zero()) throw std::logic_error("Chebyshev form left a nonzero imaginary part");
    return g.re;
}

}  // namespace

Eigen::MatrixXcd FrozenMatrix::to_complex() const {
    const auto n = static_cast<Eigen::Index>(entries.rows());
    Eigen::MatrixXcd m(n, n);
    for (Eigen::Index r = 0; r < n; ++r)
        for (Eigen::Index c = 0; c < n; ++c) m(r, c) = entries(r, c).convert_to<double>();
    return m;
}

FrozenMatrix build_matrix(const ProblemConfig& config) {
    const SignPair s = sign_pair(config);
    const int j = config.j;
    const int k = config.k;
    if (k == 1) {
        if (j != 0) throw InvalidInput("a = 1 must be normalized to a = 0 before building the matrix");
        IntMatrix m(1, 1);
        m(0, 0) = 2 * s.c * config.alpha;
        return {config, s, std::move(m)};
    }
    if (j < 1 || 2 * j > k) {
        throw InvalidInput("matrix requires 1 <= j <= k/2; reflect the configuration first (j=" +
                           std::to_string(j) + ", k=" + std::to_string(k) + ")");
    }

    IntMatrix m(k, k);
    std::vector<bool> assigned(static_cast<std::size_t>(k) * k, false);
    auto put = [&](int row, int col, int value) {  // 1-based
        const std::size_t idx = static_cast<std::size_t>(row - 1) * k + (col - 1);
        if (assigned[idx]) throw std::logic_error("overlapping sub-diagonal families in matrix construction");
        assigned[idx] = true;
        m(row - 1, col - 1) = value;
    };
    for (int r = 1; r <= j; ++r) put(r, j - r + 1, 1);
    for (int r = 1; r <= k - j; ++r) put(r, r + j, s.d);
    for (int r = j + 1; r <= k; ++r) put(r, r - j, s.c);
    for (int r = k - j + 1; r <= k; ++r) put(r, 2 * k - r - j + 1, s.c);
    return {config, s, std::move(m)};
}

IntMatrix matrix_j1(int k, int alpha, int beta) {
    return build_matrix(make_config(alpha, beta, 1, k)).entries;
}

std::vector<IntPolynomial> leading_minor_polys(int k, int alpha, int beta) {
    require_k2(k);
    const SignPair s = sign_pair(alpha, beta);
    const BigInt cd = s.c * s.d;
    std::vector<IntPolynomial> q;
    q.reserve(k);
    q.push_back({1});
    q.push_back({-1, 1});
    const IntPolynomial z{0, 1};
    for (int n = 1; n + 1 < k; ++n) q.push_back(z * q[n] - cd * q[n - 1]);
    return q;
}

IntPolynomial char_poly_j1(int k, int alpha, int beta) {
    const auto q = leading_minor_polys(k, alpha, beta);
    const SignPair s = sign_pair(alpha, beta);
    const IntPolynomial z_minus_c{-s.c, 1};
    return z_minus_c * q[k - 1] - BigInt(s.c * s.d) * q[k - 2];
}

BigInt det_closed_form(int k, int alpha, int beta) {
    require_k2(k);
    const SignPair s = sign_pair(alpha, beta);
    const BigInt base = -s.c * s.d;
    if (k % 2 == 1) {
        return boost::multiprecision::pow(base, static_cast<unsigned>((k - 1) / 2)) * (1 + s.c);
    }
    return s.c * boost::multiprecision::pow(base, static_cast<unsigned>(k / 2 - 1)) * (1 - s.d);
}

IntPolynomial theorem1_poly(int k, int alpha, int beta) {
    require_k2(k);
    const IntPolynomial u = scaled_cheb_int(ChebKind::U, k - 1);  // U_{k-1}(x/2)
    const IntPolynomial t = scaled_cheb_int(ChebKind::T, k);      // 2 T_k(x/2)
    const IntPolynomial z{0, 1};

    if (alpha == 0 && beta == 0) {
        // i^{k-1} z U_{k-1}(z/2i), and z/(2i) = (-i z)/2.
        GaussPoly g = times_i_power(substitute_minus_i(u), k - 1);
        return real_part_checked({z * g.re, z * g.im});
    }
    if (alpha == 0 && beta == 1) {
        // 2 i^k T_k(z/2i) - 2 i^{k-1} U_{k-1}(z/2i)
        GaussPoly first = times_i_power(substitute_minus_i(t), k);
        GaussPoly second = times_i_power(substitute_minus_i(u), k - 1);
        return real_part_checked({first.re - BigInt(2) * second.re, first.im - BigInt(2) * second.im});
    }
    if (alpha == 1 && beta == 0) return t;
    return IntPolynomial{-2, 1} * u;
}

std::vector<std::complex<double>> spectrum_closed_form(int k, int alpha, int beta) {
    require_k2(k);
    constexpr double pi = std::numbers::pi;
    std::vector<std::complex<double>> out;
    out.reserve(k);
    if (alpha == 0 && beta == 0) {
        out.emplace_back(0.0, 0.0);
        for (int v = 1; v < k; ++v) out.emplace_back(0.0, 2.0 * std::cos(v * pi / k));
    } else if (alpha == 1 && beta == 0) {
        for (int v = 0; v < k; ++v) out.emplace_back(2.0 * std::cos((2.0 * v + 1.0) * pi / (2.0 * k)), 0.0);
    } else if (alpha == 1 && beta == 1) {
        for (int v = 0; v < k; ++v) out.emplace_back(2.0 * std::cos(v * pi / k), 0.0);
    } else {
        throw InvalidInput("no closed-form spectrum for (alpha, beta) = (0, 1); use spectrum_numeric");
    }
    return out;
}

std::vector<std::complex<double>> spectrum_numeric(int k, int alpha, int beta) {
    return polynomial_roots(theorem1_poly(k, alpha, beta));
}

IntMatrix reduce_to_j1(const ProblemConfig& config) {
    const int j = config.j;
    const int k = config.k;
    if (j < 1 || 2 * j > k) throw InvalidInput("reduction requires 1 <= j <= k/2");
    const SignPair s = sign_pair(config);
    if (config.alpha == 0) {
        // U_{j-1}(-c x / 2) evaluated at A_{1,k}^{(1,1-beta)}, times A_{1,k}^{(0,beta)}.
        const IntPolynomial p = scaled_cheb_int(ChebKind::U, j - 1).scale_argument(-s.c);
        return matrix_poly_eval(p, matrix_j1(k, 1, 1 - config.beta)) * matrix_j1(k, 0, config.beta);
    }
    // 2c T_j(c x / 2) evaluated at A_{1,k}^{(1,beta)}.
    const IntPolynomial p = scaled_cheb_int(ChebKind::T, j).scale_argument(s.c) * BigInt(s.c);
    return matrix_poly_eval(p, matrix_j1(k, 1, config.beta));
}

IntMatrix j2_identity_rhs(int k, int alpha, int beta) {
    const SignPair s = sign_pair(alpha, beta);
    const int gamma = alpha == 0 ? 1 - beta : beta;
    IntMatrix out = BigInt(s.d) * (matrix_j1(k, 1, gamma) * matrix_j1(k, alpha, beta));
    out -= BigInt(2 * alpha * s.c) * IntMatrix::identity(k);
    return out;
}

KernelDescriptor kernel(const ProblemConfig& config) {
    const FrozenMatrix a = build_matrix(config);
    if (!classify(config).degenerate()) return {0, {}};

    const int k = config.k;
    std::vector<int> x(k);
    for (int v = 1; v <= k; ++v) {
        int exponent = 0;
        if (config.alpha == 0 && config.beta == 0) {
            exponent = v - 1;
        } else if (config.alpha == 1 && config.beta == 0) {
            exponent = (v - 1) / 2;
        } else {
            exponent = v / 2;
        }
        x[v - 1] = exponent % 2 == 0 ? 1 : -1;
    }
    std::vector<BigInt> xb(x.begin(), x.end());
    for (const auto& v : a.entries.apply(xb)) {
        if (v != 0) throw std::logic_error("closed-form kernel vector is not annihilated by the matrix");
    }
    return {1, std::move(x)};
}

std::vector<std::complex<double>> eigvec_j1(std::complex<double> z0, int k, int alpha, int beta) {
    require_k2(k);
    const SignPair s = sign_pair(alpha, beta);
    const double cd = s.c * s.d;
    std::vector<std::complex<double>> q(k);
    q[0] = 1.0;
    q[1] = z0 - 1.0;
    for (int n = 1; n + 1 < k; ++n) q[n + 1] = z0 * q[n] - cd * q[n - 1];

    std::vector<std::complex<double>> x(k);
    double d_power = 1.0;
    for (int m = 0; m < k; ++m) {
        x[m] = d_power * q[m];
        d_power *= s.d;
    }

    const Eigen::MatrixXcd a = build_matrix(make_config(alpha, beta, 1, k)).to_complex();
    const Eigen::Map<const Eigen::VectorXcd> xv(x.data(), k);
    const double residual = (a * xv - z0 * xv).cwiseAbs().maxCoeff();
    const double scale = xv.cwiseAbs().maxCoeff();
    if (residual > 1e-9 * scale) {
        throw NumericalFailure("eigvec_j1", "z0 is not an eigenvalue: residual " + std::to_string(residual));
    }
    return x;
}

int numeric_rank(const Eigen::MatrixXcd& m, double rel_tol) {
    if (m.size() == 0) return 0;
    const Eigen::JacobiSVD<Eigen::MatrixXcd> svd(m);
    const auto& sv = svd.singularValues();
    const double cutoff = rel_tol * sv(0);
    int r = 0;
    for (Eigen::Index i = 0; i < sv.size(); ++i) {
        if (sv(i) > cutoff) ++r;
    }
    return r;
}

}  // namespace frozen
