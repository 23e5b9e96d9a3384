#pragma once

#include <stdexcept>
#include <string>

namespace supermonad {

/// Malformed input: a weight that is not weakly decreasing, a window with
/// a > b, a length mismatch. The CLI maps this to exit code 2.
class ValidationError : public std::invalid_argument {
public:
    explicit ValidationError(const std::string& msg, std::string field = {})
        : std::invalid_argument(msg), field_(std::move(field)) {}

    const std::string& field() const noexcept { return field_; }

private:
    std::string field_;
};

/// Well-formed input on which a computation declines to conclude anything:
/// a failed hypothesis, a non-integral lattice class, an insufficient window.
/// Exit code 3.
class MathRefusal : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

/// A proven identity failed to hold. Always a bug. Exit code 4.
class InvariantBreach : public std::logic_error {
public:
    using std::logic_error::logic_error;
};

} // namespace supermonad
