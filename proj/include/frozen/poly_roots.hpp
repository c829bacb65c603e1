#pragma once

#include "frozen/exact.hpp"

#include <complex>
#include <span>
#include <vector>

namespace frozen {

/// All complex roots of a polynomial with complex coefficients (ascending
/// degree) by simultaneous Aberth-Ehrlich iteration. Roots are returned
/// sorted by (real, imag). Throws NumericalFailure on non-convergence.
[[nodiscard]] std::vector<std::complex<double>> aberth_roots(std::span<const std::complex<double>> coeffs,
                                                             double tol = 1e-15, int max_iter = 500);

/// Roots of an integer polynomial. Exact zero roots are split off before the
/// numeric stage, so a multiple root at the origin comes back as exact zeros.
[[nodiscard]] std::vector<std::complex<double>> polynomial_roots(const IntPolynomial& p);

/// Hausdorff distance between two finite point sets in the complex plane.
[[nodiscard]] double hausdorff_distance(std::span<const std::complex<double>> a,
                                        std::span<const std::complex<double>> b);

/// Largest distance after optimal greedy matching of two equal-size
/// multisets (each point of `a` paired with a distinct point of `b`).
[[nodiscard]] double multiset_distance(std::span<const std::complex<double>> a,
                                       std::span<const std::complex<double>> b);

}  // namespace frozen
