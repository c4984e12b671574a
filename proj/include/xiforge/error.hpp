#pragma once

// Exception hierarchy shared by every xiforge module.
//
// All numeric entry points report failure by throwing one of these types;
// the CLI maps them onto process exit codes (see tools/xiforge.cpp).

#include <cstdio>
#include <stdexcept>
#include <string>

namespace xiforge {

class Error : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

/// Argument lies on (or within the pole tolerance of) a singularity.
class PoleError : public Error {
public:
    using Error::Error;
};

/// Result magnitude is outside the representable double range.
class OverflowError : public Error {
public:
    using Error::Error;
};

/// Precondition violated: index out of range, argument outside the wedge, ...
class DomainError : public Error {
public:
    using Error::Error;
};

/// Form (ii) of the split representation was requested off the unit circle.
class FormError : public Error {
public:
    using Error::Error;
};

/// An infinite series hit its term cap before the tail bound met tolerance.
class ConvergenceError : public Error {
public:
    ConvergenceError(const std::string& what, double achieved_bound)
        : Error(what), achieved_bound_(achieved_bound) {}

    double achieved_bound() const noexcept { return achieved_bound_; }

private:
    double achieved_bound_;
};

/// Adaptive quadrature could not reach the requested tolerance.
class ToleranceNotMet : public Error {
public:
    ToleranceNotMet(const std::string& what, double achieved_estimate)
        : Error(what), achieved_estimate_(achieved_estimate) {}

    double achieved_estimate() const noexcept { return achieved_estimate_; }

private:
    double achieved_estimate_;
};

/// Critical-line scan found a different number of zeros than the degree.
class CountMismatch : public Error {
public:
    CountMismatch(const std::string& what, int found, int expected)
        : Error(what), found_(found), expected_(expected) {}

    int found() const noexcept { return found_; }
    int expected() const noexcept { return expected_; }

private:
    int found_;
    int expected_;
};

namespace detail {

/// "%.3e" formatting for error messages.
inline std::string format_sci(double x) {
    char buffer[32];
    std::snprintf(buffer, sizeof buffer, "%.3e", x);
    return buffer;
}

} // namespace detail

} // namespace xiforge
