#pragma once

// Small complex helpers that <complex> does not provide: exact-at-integer
// sin(pi z) / cos(pi z), a cancellation-free expm1, and finiteness checks.

#include <cmath>
#include <complex>
#include <numbers>
#include <string>

#include "xiforge/error.hpp"

namespace xiforge {

using ComplexValue = std::complex<double>;

namespace detail {

/// sin(pi x) with exact zeros at the integers.
template <class T>
T sin_pi(T x) {
    const T pi = std::numbers::pi_v<T>;
    T r = std::fmod(x, T(2)); // (-2, 2)
    if (r < 0) r += 2;        // [0, 2)
    if (r == 0 || r == 1) return T(0);
    if (r == T(0.5)) return T(1);
    if (r == T(1.5)) return T(-1);
    if (r <= T(0.5)) return std::sin(pi * r);
    if (r <= T(1.5)) return std::sin(pi * (1 - r));
    return -std::sin(pi * (2 - r));
}

/// cos(pi x) with exact zeros at the half-integers.
template <class T>
T cos_pi(T x) {
    return sin_pi<T>(x + T(0.5));
}

template <class T>
std::complex<T> sin_pi(std::complex<T> z) {
    const T pi = std::numbers::pi_v<T>;
    const T y = pi * z.imag();
    return {sin_pi(z.real()) * std::cosh(y), cos_pi(z.real()) * std::sinh(y)};
}

template <class T>
std::complex<T> cos_pi(std::complex<T> z) {
    const T pi = std::numbers::pi_v<T>;
    const T y = pi * z.imag();
    return {cos_pi(z.real()) * std::cosh(y), -sin_pi(z.real()) * std::sinh(y)};
}

/// exp(z) - 1 without cancellation for small |z|.
template <class T>
std::complex<T> expm1(std::complex<T> z) {
    const T x = z.real();
    const T y = z.imag();
    const T half = std::sin(y / 2);
    const T re = std::expm1(x) * std::cos(y) - 2 * half * half;
    const T im = std::exp(x) * std::sin(y);
    return {re, im};
}

/// z / (exp(z) - 1), analytic at z = 0.
template <class T>
std::complex<T> z_over_expm1(std::complex<T> z) {
    if (std::abs(z) < T(1e-5)) {
        // 1 - z/2 + z^2/12 - z^4/720
        const std::complex<T> z2 = z * z;
        return T(1) - z / T(2) + z2 / T(12) - z2 * z2 / T(720);
    }
    return z / expm1(z);
}

inline bool is_finite(ComplexValue z) {
    return std::isfinite(z.real()) && std::isfinite(z.imag());
}

inline ComplexValue require_finite(ComplexValue z, const char* what) {
    if (!is_finite(z)) throw OverflowError(std::string(what) + ": result not representable");
    return z;
}

inline double require_finite(double x, const char* what) {
    if (!std::isfinite(x)) throw OverflowError(std::string(what) + ": result not representable");
    return x;
}

/// Distance from z to the nearest non-positive integer (infinity if Re z > 0.5).
inline double distance_to_nonpositive_integer(ComplexValue z) {
    if (z.real() > 0.5) return INFINITY;
    const double n = std::round(z.real());
    if (n > 0) return INFINITY;
    return std::abs(z - ComplexValue(n, 0.0));
}

template <class T>
std::complex<T> widen(ComplexValue z) {
    return {static_cast<T>(z.real()), static_cast<T>(z.imag())};
}

template <class T>
ComplexValue narrow(std::complex<T> z) {
    return {static_cast<double>(z.real()), static_cast<double>(z.imag())};
}

} // namespace detail
} // namespace xiforge
