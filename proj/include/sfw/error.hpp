#pragma once

#include <stdexcept>
#include <string>

namespace sfw {

/// Base of every error raised by the library. `exit_code()` is the CLI
/// contract: 2 bad input, 3 precondition, 4 resource cap, 1 otherwise.
class Error : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
    virtual int exit_code() const noexcept { return 1; }
};

/// Malformed input data (files, generator lists, non-bijections).
class InputError : public Error {
public:
    using Error::Error;
    int exit_code() const noexcept override { return 2; }
};

/// A mathematical precondition does not hold (H not a subgroup, nontrivial
/// center, index constraint violated, ...).
class PreconditionError : public Error {
public:
    using Error::Error;
    int exit_code() const noexcept override { return 3; }
};

/// A configured size cap was exceeded.
class ResourceLimitError : public Error {
public:
    using Error::Error;
    int exit_code() const noexcept override { return 4; }
};

/// Internal consistency check failed. Must never fire on valid input.
class InvariantViolation : public Error {
public:
    using Error::Error;
};

/// Character table computation could not separate the class algebra.
class NumericalError : public Error {
public:
    NumericalError(const std::string& what, double residual)
        : Error(what + " (residual " + std::to_string(residual) + ")"), residual_(residual) {}
    double residual() const noexcept { return residual_; }

private:
    double residual_;
};

}  // namespace sfw
