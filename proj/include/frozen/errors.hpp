#pragma once

#include <stdexcept>
#include <string>

namespace frozen {

/// Input that violates an operation's preconditions (bad flags, k = 0,
/// unnormalized frozen argument, misaligned grids, ...).
class InvalidInput : public std::invalid_argument {
public:
    using std::invalid_argument::invalid_argument;
};

/// A numerical stage did not meet its tolerance: root finding that did not
/// converge, an inconsistent singular system, a spectrum whose asymptotics do
/// not match the boundary flags.
class NumericalFailure : public std::runtime_error {
public:
    NumericalFailure(std::string stage, const std::string& what)
        : std::runtime_error(what), stage_(std::move(stage)) {}

    [[nodiscard]] const std::string& stage() const noexcept { return stage_; }

private:
    std::string stage_;
};

}  // namespace frozen
