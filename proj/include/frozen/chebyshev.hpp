#pragma once

#include "frozen/exact.hpp"

#include <complex>
#include <vector>

namespace frozen {

enum class ChebKind { T, U };

/// Real zeros of T_n or U_n in strictly decreasing order.
struct ZeroSet {
    ChebKind kind;
    int n;
    std::vector<double> values;
};

/// T_n and U_n with exact coefficients from Y_{n+1} = 2z Y_n - Y_{n-1}.
[[nodiscard]] IntPolynomial cheb_T(int n);
[[nodiscard]] IntPolynomial cheb_U(int n);
[[nodiscard]] IntPolynomial cheb(ChebKind kind, int n);

/// Forward-recurrence evaluation, valid for any complex argument.
[[nodiscard]] std::complex<double> cheb_eval(ChebKind kind, int n, std::complex<double> z);

/// cos((2v+1)pi/2n), v = 0..n-1 for T; cos(v pi/(n+1)), v = 1..n for U.
[[nodiscard]] ZeroSet cheb_zeros(ChebKind kind, int n);

/// 2*T_n(x/2) for T and U_n(x/2) for U. Both have integer coefficients, so
/// they can be evaluated on integer matrices without leaving the integers.
[[nodiscard]] IntPolynomial scaled_cheb_int(ChebKind kind, int n);

/// p(A) by Horner's scheme in exact integer arithmetic.
[[nodiscard]] IntMatrix matrix_poly_eval(const IntPolynomial& p, const IntMatrix& a);

}  // namespace frozen
