#pragma once

#include "frozen/core_params.hpp"
#include "frozen/exact.hpp"

#include <Eigen/Dense>

#include <complex>
#include <vector>

namespace frozen {

/// The k x k main-equation matrix for a normalized configuration.
struct FrozenMatrix {
    ProblemConfig config;
    SignPair signs;
    IntMatrix entries;

    [[nodiscard]] std::size_t order() const noexcept { return entries.rows(); }
    /// Entries as a complex dense matrix for the numeric stages.
    [[nodiscard]] Eigen::MatrixXcd to_complex() const;
};

/// Null space of the main-equation matrix: one +-1 generator in the
/// degenerate cases, nothing otherwise.
struct KernelDescriptor {
    int dimension = 0;
    std::vector<int> generator;
};

/// Populates the four sub-diagonal families 1, d, c, c. Requires 2j <= k,
/// or the single-entry case j = 0, k = 1. Throws InvalidInput otherwise.
[[nodiscard]] FrozenMatrix build_matrix(const ProblemConfig& config);

/// Shorthand for the j = 1 matrix of order k.
[[nodiscard]] IntMatrix matrix_j1(int k, int alpha, int beta);

/// det(zI - A_{1,k}) from the three-term recurrence for the leading minors
/// q_0 = 1, q_1 = z - 1, q_{n+1} = z q_n - cd q_{n-1}.
[[nodiscard]] IntPolynomial char_poly_j1(int k, int alpha, int beta);

/// The minor polynomials q_0..q_{k-1} used by char_poly_j1.
[[nodiscard]] std::vector<IntPolynomial> leading_minor_polys(int k, int alpha, int beta);

/// Closed-form det A_{1,k}.
[[nodiscard]] BigInt det_closed_form(int k, int alpha, int beta);

/// Chebyshev form of det(zI - A_{1,k}), expanded exactly. The imaginary unit
/// cancels; a nonzero imaginary part throws std::logic_error.
[[nodiscard]] IntPolynomial theorem1_poly(int k, int alpha, int beta);

/// Trigonometric eigenvalues of A_{1,k}. No closed form exists for
/// (alpha, beta) = (0, 1); that case throws InvalidInput.
[[nodiscard]] std::vector<std::complex<double>> spectrum_closed_form(int k, int alpha, int beta);

/// Eigenvalues of A_{1,k} from the roots of its exact characteristic polynomial.
[[nodiscard]] std::vector<std::complex<double>> spectrum_numeric(int k, int alpha, int beta);

/// Evaluates the Chebyshev matrix-polynomial expression of A_{j,k} in terms of
/// j = 1 matrices. Equal to build_matrix(config).entries for 1 <= j <= k/2.
[[nodiscard]] IntMatrix reduce_to_j1(const ProblemConfig& config);

/// The two-step identity A_{2,k} = d A_{1,k}^{(1,gamma)} A_{1,k} - 2 alpha c I.
[[nodiscard]] IntMatrix j2_identity_rhs(int k, int alpha, int beta);

/// Closed-form kernel generator; A X = 0 is checked in integer arithmetic.
[[nodiscard]] KernelDescriptor kernel(const ProblemConfig& config);

/// Eigenvector (d^{m-1} q_{m-1}(z0))_m of A_{1,k}. Throws NumericalFailure
/// if the residual shows z0 is not an eigenvalue.
[[nodiscard]] std::vector<std::complex<double>> eigvec_j1(std::complex<double> z0, int k, int alpha, int beta);

/// Rank of a complex matrix from its singular values; values below
/// rel_tol * sigma_max count as zero.
[[nodiscard]] int numeric_rank(const Eigen::MatrixXcd& m, double rel_tol = 1e-9);

}  // namespace frozen
