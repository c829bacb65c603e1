#pragma once

#include "frozen/core_params.hpp"
#include "frozen/interval_ops.hpp"

#include <variant>
#include <vector>

namespace frozen {

/// Eigenvalues in asymptotic order: entry n-1 is attached to the reference
/// zero (n - (alpha+beta)/2)^2 pi^2 (for alpha = beta = 1 the first entry is
/// attached to the extra zero at the origin).
struct Spectrum {
    int alpha = 0;
    int beta = 0;
    std::vector<cplx> eigenvalues;

    [[nodiscard]] std::size_t count() const noexcept { return eigenvalues.size(); }
};

/// n-th zero (1-based) of the zero-potential characteristic function.
[[nodiscard]] double reference_eigenvalue(int n, int alpha, int beta);

/// Zero-potential characteristic function: sin(rho)/rho, rho sin(rho) or
/// (-1)^alpha cos(rho).
[[nodiscard]] cplx reference_delta(int alpha, int beta, cplx lambda);

/// d/dlambda of reference_delta at its n-th zero.
[[nodiscard]] double reference_delta_slope(int n, int alpha, int beta);

/// sin(rho s)/rho, entire in lambda = rho^2; Taylor series for |rho| < 1e-3.
[[nodiscard]] cplx sin_kernel(cplx rho, double s);

/// Characteristic function from the fundamental solutions C, S built around
/// the frozen point, with midpoint quadrature on q's grid. Works for any
/// a = j/k aligned with the grid (q.k() == config.k).
[[nodiscard]] cplx delta_direct(const GridFunction& q, const ProblemConfig& config, cplx lambda);

/// Characteristic function as a transform of W (midpoint quadrature). For
/// alpha = beta = 0 the mean of W over (0,1) enters as mean/lambda; it is
/// dropped inside the series region, where an entire Delta forces it to vanish.
[[nodiscard]] cplx delta_from_w(const GridFunction& w, int alpha, int beta, cplx lambda);

/// Truncated canonical product: reference_delta * prod_{n <= n_used}
/// (lambda_n - lambda) / (lambda_n^0 - lambda), with the removable 0/0 at a
/// retained reference zero resolved analytically.
[[nodiscard]] cplx delta_from_spectrum(const Spectrum& spec, int n_used, cplx lambda);

/// One entire function, three data sources.
class DeltaEvaluator {
public:
    struct Direct {
        GridFunction q;
        ProblemConfig config;
    };
    struct FromW {
        GridFunction w;
        int alpha;
        int beta;
    };
    struct FromSpectrum {
        Spectrum spectrum;
        int n_used;
    };

    explicit DeltaEvaluator(Direct d) : payload_(std::move(d)) {}
    explicit DeltaEvaluator(FromW w) : payload_(std::move(w)) {}
    explicit DeltaEvaluator(FromSpectrum s) : payload_(std::move(s)) {}

    [[nodiscard]] cplx operator()(cplx lambda) const;

private:
    std::variant<Direct, FromW, FromSpectrum> payload_;
};

struct EigenOptions {
    int max_iter = 60;
    double step_tol = 1e-13;      ///< relative Newton step for convergence
    double residual_tol = 1e-10;  ///< |Delta| <= tol * |Delta'| * max(1, |lambda|)
    int homotopy_steps = 16;      ///< initial continuation steps for the fallback
};

/// First n eigenvalues: Newton on delta_direct from the reference zeros,
/// numerical derivative, secant fallback. Index collisions or failures
/// trigger a continuation in the potential strength before giving up
/// with a NumericalFailure listing the indices.
[[nodiscard]] Spectrum eigenvalues(const GridFunction& q, const ProblemConfig& config, int n,
                                   const EigenOptions& opts = {});

/// W on the (k, m) grid from a spectrum via the Fourier coefficients of W
/// read off the truncated product at the zeros of the reference function.
/// Uses `modes` basis functions and `n_used` eigenvalues.
[[nodiscard]] GridFunction extract_w(const Spectrum& spec, int n_used, int modes, int k, int m);

/// Fourier coefficients used by extract_w: cosine coefficients
/// int W cos(pi m x), m = 0..modes-1 for alpha == beta; sine coefficients
/// int W sin((m - 1/2) pi x), m = 1..modes for alpha != beta.
[[nodiscard]] std::vector<cplx> w_coefficients(const Spectrum& spec, int n_used, int modes);

}  // namespace frozen
