#pragma once

#include "frozen/characteristic.hpp"
#include "frozen/core_params.hpp"
#include "frozen/interval_ops.hpp"
#include "frozen/main_equation.hpp"

#include <span>
#include <string>
#include <string_view>
#include <vector>

namespace frozen {

/// Affine set of potentials sharing the spectrum of `base`: base + R^{-1}(X f)
/// for f ranging over functions on (0,b).
struct IsoSpectralFamily {
    GridFunction base;
    ProblemConfig config;
    std::vector<int> kernel_vector;

    /// R^{-1}(X f); f holds base.m() samples on (0,b).
    [[nodiscard]] GridFunction generator(std::span<const cplx> f) const;
    [[nodiscard]] GridFunction member(std::span<const cplx> f) const { return base + generator(f); }
};

/// Throws InvalidInput for non-degenerate or non-normalized configurations.
[[nodiscard]] IsoSpectralFamily make_family(const GridFunction& q0, const ProblemConfig& config);

/// q0 + R^{-1}(X f).
[[nodiscard]] GridFunction algorithm1(const GridFunction& q0, const ProblemConfig& config, std::span<const cplx> f);

/// f(t) = 10 t / (3b) - 25 t^2 / (9 b^2) with b = 1/k.
[[nodiscard]] double paper_profile(double t, int k);

/// paper_profile at the m midpoints of (0,b).
[[nodiscard]] std::vector<cplx> paper_profile_samples(int k, int m);

/// One row of the piecewise description of R^{-1}(X f): sign, argument map
/// and interval, e.g. "-f(2/7-x) on (1/7,2/7)".
struct PiecewiseRow {
    int sign = 1;
    std::string argument;
    std::string interval;

    [[nodiscard]] std::string to_string() const;
    friend bool operator==(const PiecewiseRow&, const PiecewiseRow&) = default;
};

/// Symbolic rows of R^{-1}(X f) from left to right; X is the closed-form kernel vector.
[[nodiscard]] std::vector<PiecewiseRow> symbolic_table(const ProblemConfig& config, std::span<const int> x);

enum class ExampleId { I7, I8, II, III, IV };

[[nodiscard]] std::string_view to_string(ExampleId id);
/// Throws InvalidInput for unknown names.
[[nodiscard]] ExampleId parse_example_id(std::string_view name);
[[nodiscard]] ProblemConfig example_config(ExampleId id);

struct ExampleReport {
    ExampleId id;
    ProblemConfig config;
    std::vector<int> kernel_vector;
    std::vector<PiecewiseRow> table;
    GridFunction samples;  ///< R^{-1}(X f) for the quadratic profile

    /// One row per line, newline-terminated.
    [[nodiscard]] std::string table_text() const;
};

[[nodiscard]] ExampleReport reproduce_example(ExampleId id, int m = 64);

/// Static SVG plot of the sampled profile with the subinterval grid.
[[nodiscard]] std::string render_svg(const ExampleReport& report);

struct PipelineOptions {
    int m = 128;                    ///< samples per subinterval of the output grid
    int n_used = 200;               ///< eigenvalues entering the product
    int modes = 50;                 ///< Fourier modes of W
    double consistency_tol = 1e-9;  ///< relative residual allowed by solve_inverse
};

/// Largest |lambda_n - lambda_n^0| / (spacing at n) over the last quarter of
/// the first n_used eigenvalues.
[[nodiscard]] double asymptotic_drift(const Spectrum& spec, int n_used);

/// W reconstructed from a spectrum on the normalized grid of `config`.
[[nodiscard]] GridFunction w_from_spectrum(const Spectrum& spec, const ProblemConfig& config,
                                           const PipelineOptions& opts = {});

/// Spectrum -> truncated product -> Fourier coefficients of W -> main
/// equation. Configurations with a > 1/2 are solved on the reflected problem
/// and mapped back. A drift above 1/4 of the eigenvalue spacing means the
/// spectrum does not fit the boundary flags and throws NumericalFailure.
[[nodiscard]] MainEqSolution invert_from_spectrum(const Spectrum& spec, const ProblemConfig& config,
                                                  const PipelineOptions& opts = {});

}  // namespace frozen
