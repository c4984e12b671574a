#pragma once

// Foundational scalar functions: complex gamma and digamma, Bernoulli and
// Stirling numbers as exact rationals, Hermite polynomials, Pochhammer
// symbols and double factorials.
//
// Stirling convention: stirling_first_unsigned(n, k) returns c(n, k) = |s(n, k)|,
// the coefficients of the rising factorial
//
//     (z)_n = z (z + 1) ... (z + n - 1) = sum_k c(n, k) z^k.
//
// The signed numbers of the first kind are s(n, k) = (-1)^(n-k) c(n, k); they
// belong to the falling-factorial expansion. In particular c(n, 1) = (n - 1)!.
//
// Bernoulli convention: B_1 = -1/2, so that zeta(-n) = (-1)^n B_{n+1} / (n + 1)
// holds at n = 0.

#include <array>
#include <cmath>
#include <complex>
#include <cstdint>
#include <mutex>
#include <numbers>
#include <utility>
#include <vector>

#include <boost/multiprecision/cpp_int.hpp>

#include "xiforge/detail/complex_math.hpp"
#include "xiforge/error.hpp"

namespace xiforge {

using BigInt = boost::multiprecision::cpp_int;
using RationalValue = boost::multiprecision::cpp_rational;

/// Arguments closer than this to a non-positive integer are treated as poles.
inline constexpr double kPoleTolerance = 1e-12;

namespace detail {

// Lanczos approximation with Godfrey's coefficients, g = 607/128, fifteen
// terms. The shorter g = 7 set drifts to about 2e-13 at |Im z| near 40.
inline constexpr double kLanczosG = 607.0 / 128.0;
inline constexpr std::array<double, 15> kLanczosCoefficients = {
    0.99999999999999709182,   57.156235665862923517,    -59.597960355475491248,  14.136097974741747174,
    -0.49191381609762019978,  0.33994649984811888699e-4, 0.46523628927048575665e-4, -0.98374475304879564677e-4,
    0.15808870322491248884e-3, -0.21026444172410488319e-3, 0.21743961811521264320e-3, -0.16431810653676389022e-3,
    0.84418223983852743293e-4, -0.26190838401581408670e-4, 0.36899182659531622704e-5};

// log Gamma(z) for Re z >= 1/2, in extended precision: the imaginary part of
// the log grows with |Im z| and rounding it to double costs digits after exp.
inline std::complex<long double> log_gamma_lanczos_wide(ComplexValue z_in) {
    using W = long double;
    const std::complex<W> z = std::complex<W>(z_in.real(), z_in.imag()) - W(1);
    std::complex<W> series = kLanczosCoefficients[0];
    for (std::size_t i = 1; i < kLanczosCoefficients.size(); ++i)
        series += W(kLanczosCoefficients[i]) / (z + static_cast<W>(i));
    const std::complex<W> t = z + W(kLanczosG) + W(0.5);
    return W(0.5) * std::log(W(2) * std::numbers::pi_v<W>) + (z + W(0.5)) * std::log(t) - t + std::log(series);
}

inline ComplexValue log_gamma_lanczos(ComplexValue z) {
    const auto wide = log_gamma_lanczos_wide(z);
    return {static_cast<double>(wide.real()), static_cast<double>(wide.imag())};
}

inline ComplexValue exp_checked(std::complex<long double> log_value, const char* what) {
    if (log_value.real() > 709.78L) throw OverflowError(std::string(what) + ": |Gamma| exceeds double range");
    const auto value = std::exp(log_value);
    return {static_cast<double>(value.real()), static_cast<double>(value.imag())};
}

} // namespace detail

/// Complex gamma function; reflection below Re s = 1/2.
inline ComplexValue gamma_complex(ComplexValue s) {
    if (detail::distance_to_nonpositive_integer(s) < kPoleTolerance)
        throw PoleError("gamma_complex: argument is a non-positive integer");
    if (s.real() >= 0.5) return detail::exp_checked(detail::log_gamma_lanczos_wide(s), "gamma_complex");

    using W = long double;
    const ComplexValue sine = detail::sin_pi(s);
    const std::complex<W> log_value = std::log(std::numbers::pi_v<W>) -
                                      std::log(std::complex<W>(sine.real(), sine.imag())) -
                                      detail::log_gamma_lanczos_wide(1.0 - s);
    return detail::exp_checked(log_value, "gamma_complex");
}

/// log|Gamma(x)| and sign(Gamma(x)) for real x off the poles.
inline std::pair<double, int> log_gamma_real(double x) {
    if (detail::distance_to_nonpositive_integer({x, 0.0}) < kPoleTolerance)
        throw PoleError("log_gamma_real: argument is a non-positive integer");
    if (x >= 0.5) return {detail::log_gamma_lanczos({x, 0.0}).real(), 1};
    const double sine = detail::sin_pi(x);
    const double log_abs =
        std::log(std::numbers::pi) - std::log(std::abs(sine)) - detail::log_gamma_lanczos({1.0 - x, 0.0}).real();
    return {log_abs, sine > 0 ? 1 : -1};
}

/// Digamma psi = Gamma'/Gamma.
inline ComplexValue digamma(ComplexValue s) {
    if (detail::distance_to_nonpositive_integer(s) < kPoleTolerance)
        throw PoleError("digamma: argument is a non-positive integer");
    if (s.real() < 0.5) {
        // psi(s) = psi(1 - s) - pi cot(pi s)
        const ComplexValue cot = detail::cos_pi(s) / detail::sin_pi(s);
        return digamma(1.0 - s) - std::numbers::pi * cot;
    }
    ComplexValue shift = 0.0;
    while (std::abs(s) < 15.0) {
        shift -= 1.0 / s;
        s += 1.0;
    }
    // B_2k / (2k) for k = 1..8
    static constexpr std::array<double, 8> kCoefficients = {
        1.0 / 12.0,    -1.0 / 120.0,   1.0 / 252.0,          -1.0 / 240.0,
        5.0 / 660.0, -691.0 / 32760.0, 7.0 / 84.0, -3617.0 / 8160.0};
    const ComplexValue inv2 = 1.0 / (s * s);
    ComplexValue power = inv2;
    ComplexValue asymptotic = std::log(s) - 0.5 / s;
    for (double c : kCoefficients) {
        asymptotic -= c * power;
        power *= inv2;
    }
    return asymptotic + shift;
}

/// Physicists' Hermite polynomial by the three-term recurrence; T may be real
/// or complex.
template <class T>
T hermite_value(unsigned n, T x) {
    T previous = T(1);
    if (n == 0) return previous;
    T current = T(2) * x;
    for (unsigned k = 1; k < n; ++k) {
        T next = T(2) * x * current - T(2 * k) * previous;
        previous = current;
        current = next;
    }
    return current;
}

/// Sum of |coefficients| of H_n evaluated at r >= 0; bounds |H_n(z)| for |z| <= r.
template <class T>
T hermite_envelope(unsigned n, T r) {
    T previous = T(1);
    if (n == 0) return previous;
    T current = T(2) * r;
    for (unsigned k = 1; k < n; ++k) {
        T next = T(2) * r * current + T(2 * k) * previous;
        previous = current;
        current = next;
    }
    return current;
}

inline double hermite(unsigned n, double x) {
    return detail::require_finite(hermite_value<double>(n, x), "hermite");
}

/// Rising factorial (a)_n = a (a + 1) ... (a + n - 1).
template <class T>
T pochhammer_value(T a, unsigned n) {
    T product = T(1);
    for (unsigned k = 0; k < n; ++k) product *= a + T(k);
    return product;
}

inline ComplexValue pochhammer(ComplexValue a, unsigned n) {
    return detail::require_finite(pochhammer_value<ComplexValue>(a, n), "pochhammer");
}

/// n!! for n >= -1, with (-1)!! = 0!! = 1.
inline BigInt double_factorial(int n) {
    if (n < -1) throw DomainError("double_factorial: n must be >= -1");
    BigInt product = 1;
    for (int k = n; k > 1; k -= 2) product *= k;
    return product;
}

inline BigInt factorial(unsigned n) {
    BigInt product = 1;
    for (unsigned k = 2; k <= n; ++k) product *= k;
    return product;
}

inline BigInt binomial(unsigned n, unsigned k) {
    if (k > n) return 0;
    BigInt value = 1;
    for (unsigned i = 0; i < k; ++i) value = value * (n - i) / (i + 1);
    return value;
}

namespace detail {

class BernoulliTable {
public:
    RationalValue get(unsigned n) {
        std::lock_guard lock(mutex_);
        if (n >= values_.size()) extend(n);
        return values_[n];
    }

private:
    // Akiyama-Tanigawa: produces B_m with B_1 = +1/2; the sign of B_1 is
    // flipped on the way out.
    void extend(unsigned n) {
        std::vector<RationalValue> row(n + 1);
        values_.assign(n + 1, RationalValue(0));
        for (unsigned m = 0; m <= n; ++m) {
            row[m] = RationalValue(1, m + 1);
            for (unsigned j = m; j >= 1; --j) row[j - 1] = j * (row[j - 1] - row[j]);
            values_[m] = row[0];
        }
        if (n >= 1) values_[1] = RationalValue(-1, 2);
    }

    std::mutex mutex_;
    std::vector<RationalValue> values_;
};

inline BernoulliTable& bernoulli_table() {
    static BernoulliTable table;
    return table;
}

class StirlingTable {
public:
    BigInt get(unsigned n, unsigned k) {
        std::lock_guard lock(mutex_);
        while (rows_.size() <= n) {
            const std::size_t m = rows_.size();
            std::vector<BigInt> row(m + 1, BigInt(0));
            if (m == 0) {
                row[0] = 1;
            } else {
                const auto& prev = rows_[m - 1];
                // c(m, j) = (m - 1) c(m - 1, j) + c(m - 1, j - 1)
                for (std::size_t j = 1; j <= m; ++j) {
                    BigInt value = prev[j - 1];
                    if (j < m) value += BigInt(m - 1) * prev[j];
                    row[j] = value;
                }
            }
            rows_.push_back(std::move(row));
        }
        return rows_[n][k];
    }

private:
    std::mutex mutex_;
    std::vector<std::vector<BigInt>> rows_;
};

inline StirlingTable& stirling_table() {
    static StirlingTable table;
    return table;
}

} // namespace detail

/// Exact Bernoulli number B_n (B_1 = -1/2).
inline RationalValue bernoulli(unsigned n) {
    if (n >= 3 && n % 2 == 1) return RationalValue(0);
    return detail::bernoulli_table().get(n);
}

/// Unsigned Stirling number of the first kind c(n, k) = |s(n, k)|.
inline RationalValue stirling_first_unsigned(unsigned n, unsigned k) {
    if (k > n) throw DomainError("stirling_first_unsigned: k must not exceed n");
    return RationalValue(detail::stirling_table().get(n, k));
}

inline double to_double(const RationalValue& r) {
    return r.convert_to<double>();
}

} // namespace xiforge
