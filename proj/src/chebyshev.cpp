#include "frozen/chebyshev.hpp"

#include "frozen/errors.hpp"

#include <cmath>
#include <numbers>
#include <string>

namespace frozen {

namespace {

IntPolynomial recurrence(IntPolynomial y0, IntPolynomial y1, const IntPolynomial& multiplier, int n) {
    if (n == 0) return y0;
    for (int i = 1; i < n; ++i) {
        IntPolynomial next = multiplier * y1 - y0;
        y0 = std::move(y1);
        y1 = std::move(next);
    }
    return y1;
}

void require_nonnegative(int n) {
    if (n < 0) throw InvalidInput("Chebyshev degree must be nonnegative, got " + std::to_string(n));
}

}  // namespace

IntPolynomial cheb_T(int n) {
    require_nonnegative(n);
    return recurrence({1}, {0, 1}, {0, 2}, n);
}

IntPolynomial cheb_U(int n) {
    require_nonnegative(n);
    return recurrence({1}, {0, 2}, {0, 2}, n);
}

IntPolynomial cheb(ChebKind kind, int n) {
    return kind == ChebKind::T ? cheb_T(n) : cheb_U(n);
}

std::complex<double> cheb_eval(ChebKind kind, int n, std::complex<double> z) {
    require_nonnegative(n);
    std::complex<double> y0 = 1.0;
    std::complex<double> y1 = kind == ChebKind::T ? z : 2.0 * z;
    if (n == 0) return y0;
    for (int i = 1; i < n; ++i) {
        const std::complex<double> next = 2.0 * z * y1 - y0;
        y0 = y1;
        y1 = next;
    }
    return y1;
}

ZeroSet cheb_zeros(ChebKind kind, int n) {
    if (n < 1) throw InvalidInput("zero set requires n >= 1");
    ZeroSet zs{kind, n, {}};
    zs.values.reserve(n);
    constexpr double pi = std::numbers::pi;
    if (kind == ChebKind::T) {
        for (int v = 0; v < n; ++v) zs.values.push_back(std::cos((2.0 * v + 1.0) * pi / (2.0 * n)));
    } else {
        for (int v = 1; v <= n; ++v) zs.values.push_back(std::cos(v * pi / (n + 1.0)));
    }
    return zs;
}

IntPolynomial scaled_cheb_int(ChebKind kind, int n) {
    const IntPolynomial base = cheb(kind, n);
    const BigInt lead = kind == ChebKind::T ? 2 : 1;
    std::vector<BigInt> out(base.coeffs().size());
    for (std::size_t i = 0; i < out.size(); ++i) {
        const BigInt scaled = lead * base.coeffs()[i];
        const BigInt divisor = BigInt(1) << static_cast<unsigned>(i);
        if (scaled % divisor != 0) {
            throw std::logic_error("non-integer coefficient in scaled Chebyshev polynomial");
        }
        out[i] = scaled / divisor;
    }
    return IntPolynomial(std::move(out));
}

IntMatrix matrix_poly_eval(const IntPolynomial& p, const IntMatrix& a) {
    if (!a.square()) throw InvalidInput("polynomial of a non-square matrix");
    const std::size_t n = a.rows();
    IntMatrix acc(n, n);
    const auto& c = p.coeffs();
    for (auto it = c.rbegin(); it != c.rend(); ++it) {
        acc = acc * a;
        for (std::size_t i = 0; i < n; ++i) acc(i, i) += *it;
    }
    return acc;
}

}  // namespace frozen
