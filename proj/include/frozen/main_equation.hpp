#pragma once

#include "frozen/core_params.hpp"
#include "frozen/interval_ops.hpp"

#include <optional>

namespace frozen {

/// Solution set of the main equation: particular + span of the kernel
/// direction. The generator is R^{-1}(X * 1), the lift of the unit function.
struct MainEqSolution {
    GridFunction particular;
    std::optional<GridFunction> kernel_generator;
    bool degenerate = false;
};

enum class SolveMethod {
    Auto,          ///< LU when nonsingular, minimum-norm least squares otherwise
    LU,            ///< nonsingular configurations only
    LeastSquares,  ///< minimum-norm least squares (complete orthogonal decomposition)
};

/// W from the three-branch piecewise formula. Requires a normalized config
/// and a grid with q.k() == config.k.
[[nodiscard]] GridFunction forward_w_direct(const GridFunction& q, const ProblemConfig& config);

/// W = ((-1)^{alpha beta} / 2) Q^{-1} A R q.
[[nodiscard]] GridFunction forward_w_matrix(const GridFunction& q, const ProblemConfig& config);

/// Solves A (Rq)(t) = 2 (-1)^{alpha beta} (QW)(t) at every local grid point.
/// In the degenerate case the minimum-norm solution is returned together
/// with the kernel generator; a residual above tol * (|rhs| + |A| |y|) at any point
/// throws NumericalFailure naming the worst point.
[[nodiscard]] MainEqSolution solve_inverse(const GridFunction& w, const ProblemConfig& config,
                                           SolveMethod method = SolveMethod::Auto, double tol = 1e-9);

}  // namespace frozen
