#pragma once

#include <string_view>
#include <utility>

namespace frozen {

/// Boundary flags and the rational frozen argument a = j/k.
///
/// Flags select y^(alpha)(0) = y^(beta)(1) = 0. Instances produced by
/// make_config always carry gcd(j, k) = 1 and 0 <= j <= k.
struct ProblemConfig {
    int alpha = 0;
    int beta = 0;
    int j = 0;
    int k = 1;

    [[nodiscard]] double a() const noexcept { return static_cast<double>(j) / k; }
    [[nodiscard]] bool normalized() const noexcept { return 2 * j <= k; }

    friend bool operator==(const ProblemConfig&, const ProblemConfig&) = default;
};

/// Sign constants of the main-equation matrix: c = (-1)^(beta+1), d = (-1)^(alpha+beta).
struct SignPair {
    int c = 0;
    int d = 0;
    friend bool operator==(const SignPair&, const SignPair&) = default;
};

enum class DegeneracyKind { Degenerate, NonDegenerate };

/// Condition groups I-IV are the degenerate cases, V-VII the non-degenerate ones.
enum class CaseLabel { I, II, III, IV, V, VI, VII };

struct Classification {
    DegeneracyKind kind;
    CaseLabel case_label;

    [[nodiscard]] bool degenerate() const noexcept { return kind == DegeneracyKind::Degenerate; }
    friend bool operator==(const Classification&, const Classification&) = default;
};

/// Validates flags and reduces j/k to lowest terms. Throws InvalidInput for
/// flags outside {0,1}, k < 1 or j outside [0, k].
[[nodiscard]] ProblemConfig make_config(int alpha, int beta, int j, int k);

/// Spectral symmetry L(q(x), a, alpha, beta) ~ L(q(1-x), 1-a, beta, alpha).
/// Pure involution: reflect(reflect(c)) == c.
[[nodiscard]] ProblemConfig reflect(const ProblemConfig& config);

/// Maps a > 1/2 onto the reflected problem; the flag tells the caller to
/// reflect potentials x -> 1-x as well.
[[nodiscard]] std::pair<ProblemConfig, bool> normalize_to_half(const ProblemConfig& config);

[[nodiscard]] SignPair sign_pair(const ProblemConfig& config);
[[nodiscard]] SignPair sign_pair(int alpha, int beta);

[[nodiscard]] Classification classify(const ProblemConfig& config);

[[nodiscard]] std::string_view to_string(DegeneracyKind kind);
[[nodiscard]] std::string_view to_string(CaseLabel label);

}  // namespace frozen
