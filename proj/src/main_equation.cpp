#include "frozen/main_equation.hpp"

#include "frozen/errors.hpp"
#include "frozen/frozen_matrix.hpp"

#include <Eigen/Dense>

#include <sstream>

namespace frozen {

namespace {

void check_alignment(const GridFunction& f, const ProblemConfig& config) {
    if (!config.normalized()) {
        throw InvalidInput("main equation requires a <= 1/2; reflect the configuration first");
    }
    if (f.k() != config.k) {
        throw InvalidInput("grid has k=" + std::to_string(f.k()) + " subintervals but the frozen argument needs k=" +
                           std::to_string(config.k));
    }
}

double prefactor(const ProblemConfig& config) {
    return (config.alpha * config.beta) % 2 == 0 ? 0.5 : -0.5;
}

}  // namespace

GridFunction forward_w_direct(const GridFunction& q, const ProblemConfig& config) {
    check_alignment(q, config);
    const SignPair s = sign_pair(config);
    const double half = prefactor(config);
    const std::size_t n = q.size();
    const std::size_t ja = static_cast<std::size_t>(config.j) * q.m();  // grid index of x = a

    GridFunction w(q.k(), q.m());
    for (std::size_t i = 0; i < n; ++i) {
        cplx v;
        if (i < ja) {
            v = q[n - ja + i] + static_cast<double>(s.d) * q[n - ja - i - 1];
        } else if (i < n - ja) {
            v = static_cast<double>(s.c) * q[n + ja - i - 1] + static_cast<double>(s.d) * q[n - ja - i - 1];
        } else {
            v = static_cast<double>(s.c) * (q[n + ja - i - 1] + q[i + ja - n]);
        }
        w[i] = half * v;
    }
    return w;
}

GridFunction forward_w_matrix(const GridFunction& q, const ProblemConfig& config) {
    check_alignment(q, config);
    const FrozenMatrix a = build_matrix(config);
    const SubintervalVector rq = r_apply(q, config.j);
    const int k = q.k();
    const int m = q.m();
    SubintervalVector out(k, m);
    for (int r = 0; r < k; ++r) {
        for (int c = 0; c < k; ++c) {
            const int entry = a.entries(r, c).convert_to<int>();
            if (entry == 0) continue;
            for (int p = 0; p < m; ++p) out(r, p) += static_cast<double>(entry) * rq(c, p);
        }
    }
    GridFunction w = q_inverse(out);
    w *= prefactor(config);
    return w;
}

MainEqSolution solve_inverse(const GridFunction& w, const ProblemConfig& config, SolveMethod method, double tol) {
    check_alignment(w, config);
    const FrozenMatrix frozen = build_matrix(config);
    const bool degenerate = classify(config).degenerate();
    const int k = w.k();
    const int m = w.m();

    const SubintervalVector qw = q_apply(w);
    const double scale = 1.0 / prefactor(config);  // 2 (-1)^{alpha beta}
    Eigen::MatrixXcd rhs(k, m);
    for (int v = 0; v < k; ++v)
        for (int p = 0; p < m; ++p) rhs(v, p) = scale * qw(v, p);

    const Eigen::MatrixXcd a = frozen.to_complex();
    Eigen::MatrixXcd y;
    if (method == SolveMethod::Auto) method = degenerate ? SolveMethod::LeastSquares : SolveMethod::LU;
    if (method == SolveMethod::LU) {
        if (degenerate) throw InvalidInput("LU solve requested for a singular (degenerate) configuration");
        y = a.partialPivLu().solve(rhs);
    } else {
        y = a.completeOrthogonalDecomposition().solve(rhs);
    }

    const double a_norm = a.cwiseAbs().rowwise().sum().maxCoeff();
    double worst = 0.0;
    int worst_point = -1;
    for (int p = 0; p < m; ++p) {
        const double res = (a * y.col(p) - rhs.col(p)).norm();
        const double bound = tol * (rhs.col(p).norm() + a_norm * y.col(p).norm());
        if (res > bound && res - bound > worst) {
            worst = res - bound;
            worst_point = p;
        }
    }
    if (worst_point >= 0) {
        std::ostringstream os;
        os << "main equation is inconsistent: W is not in the range of the forward map (worst local point t="
           << (worst_point + 0.5) / (static_cast<double>(k) * m) << ", excess residual " << worst << ")";
        throw NumericalFailure("solve_inverse", os.str());
    }

    SubintervalVector rq(k, m);
    for (int v = 0; v < k; ++v)
        for (int p = 0; p < m; ++p) rq(v, p) = y(v, p);

    MainEqSolution sol{r_inverse(rq, config.j), std::nullopt, degenerate};
    if (degenerate) {
        const KernelDescriptor ker = kernel(config);
        const std::vector<cplx> unit(m, cplx(1.0));
        sol.kernel_generator = r_inverse(lift(ker.generator, unit), config.j);
    }
    return sol;
}

}  // namespace frozen
