#include "frozen/core_params.hpp"

#include "frozen/errors.hpp"

#include <numeric>
#include <string>

namespace frozen {

ProblemConfig make_config(int alpha, int beta, int j, int k) {
    if ((alpha != 0 && alpha != 1) || (beta != 0 && beta != 1)) {
        throw InvalidInput("boundary flags must be 0 or 1");
    }
    if (k < 1) {
        throw InvalidInput("denominator k must be positive, got " + std::to_string(k));
    }
    if (j < 0 || j > k) {
        throw InvalidInput("numerator j must lie in [0, k], got j=" + std::to_string(j) +
                           " k=" + std::to_string(k));
    }
    const int g = std::gcd(j, k);
    return ProblemConfig{alpha, beta, j / g, k / g};
}

ProblemConfig reflect(const ProblemConfig& config) {
    return ProblemConfig{config.beta, config.alpha, config.k - config.j, config.k};
}

std::pair<ProblemConfig, bool> normalize_to_half(const ProblemConfig& config) {
    if (2 * config.j > config.k) {
        return {reflect(config), true};
    }
    return {config, false};
}

SignPair sign_pair(int alpha, int beta) {
    const int c = (beta + 1) % 2 == 0 ? 1 : -1;
    const int d = (alpha + beta) % 2 == 0 ? 1 : -1;
    return SignPair{c, d};
}

SignPair sign_pair(const ProblemConfig& config) {
    return sign_pair(config.alpha, config.beta);
}

Classification classify(const ProblemConfig& config) {
    const bool j_even = config.j % 2 == 0;
    const bool k_even = config.k % 2 == 0;
    const bool jk_even = (config.j + config.k) % 2 == 0;
    using enum CaseLabel;
    constexpr auto deg = DegeneracyKind::Degenerate;
    constexpr auto nondeg = DegeneracyKind::NonDegenerate;

    if (config.alpha == 0 && config.beta == 0) return {deg, I};
    if (config.alpha == 0) return j_even ? Classification{deg, II} : Classification{nondeg, V};
    if (config.beta == 0) return jk_even ? Classification{deg, III} : Classification{nondeg, VI};
    return k_even ? Classification{deg, IV} : Classification{nondeg, VII};
}

std::string_view to_string(DegeneracyKind kind) {
    return kind == DegeneracyKind::Degenerate ? "Degenerate" : "NonDegenerate";
}

std::string_view to_string(CaseLabel label) {
    switch (label) {
        case CaseLabel::I: return "I";
        case CaseLabel::II: return "II";
        case CaseLabel::III: return "III";
        case CaseLabel::IV: return "IV";
        case CaseLabel::V: return "V";
        case CaseLabel::VI: return "VI";
        case CaseLabel::VII: return "VII";
    }
    return "?";
}

}  // namespace frozen
