#ifndef SHIFTFLIP_ERROR_HPP
#define SHIFTFLIP_ERROR_HPP

#include <stdexcept>
#include <string>

namespace shiftflip {

/// Malformed input: shape or label mismatch, unknown symbol, bad argument.
class InputError : public std::invalid_argument {
public:
    using std::invalid_argument::invalid_argument;
};

/// A mathematical check failed. `identity()` names what was violated
/// (an axiom such as "J^2 = I", an identity such as "A = RS", or a
/// spec-level property) so callers can report a locator.
class CheckFailure : public std::runtime_error {
public:
    CheckFailure(std::string identity, const std::string& detail)
        : std::runtime_error(identity + ": " + detail), identity_(std::move(identity)) {}

    const std::string& identity() const noexcept { return identity_; }

private:
    std::string identity_;
};

/// An exhaustive search would exceed its configured budget.
class BudgetExceeded : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

}  // namespace shiftflip

#endif  // SHIFTFLIP_ERROR_HPP
