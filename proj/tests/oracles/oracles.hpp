#pragma once

// Reference implementations used only by the tests. Each one takes a route
// different from the library's: Euler-Maclaurin for zeta, shifted Stirling
// series for Gamma, Richardson-extrapolated harmonic sums for digamma, the
// binomial recurrence for Bernoulli numbers, explicit coefficients for
// Hermite polynomials, fixed-length brute-force theta sums, and exact
// rational hypergeometric sums.

#include <array>
#include <cmath>
#include <complex>
#include <numbers>
#include <vector>

#include <boost/multiprecision/cpp_int.hpp>

namespace oracle {

using Real = long double;
using Cx = std::complex<Real>;
using Rational = boost::multiprecision::cpp_rational;
using Integer = boost::multiprecision::cpp_int;

inline constexpr Real kPi = std::numbers::pi_v<Real>;

inline double rel_err(std::complex<double> got, Cx want) {
    const Cx diff = Cx(got.real(), got.imag()) - want;
    const Real scale = std::abs(want);
    return static_cast<double>(scale == 0 ? std::abs(diff) : std::abs(diff) / scale);
}

inline std::complex<double> narrow(Cx z) {
    return {static_cast<double>(z.real()), static_cast<double>(z.imag())};
}

/// B_n from sum_{k=0}^{n} C(n+1, k) B_k = 0, so B_1 = -1/2.
inline std::vector<Rational> bernoulli_table(unsigned n_max) {
    std::vector<Rational> b(n_max + 1);
    b[0] = 1;
    for (unsigned n = 1; n <= n_max; ++n) {
        Rational sum = 0;
        Integer binom = 1; // C(n+1, k)
        for (unsigned k = 0; k < n; ++k) {
            sum += Rational(binom) * b[k];
            binom = binom * (n + 1 - k) / (k + 1);
        }
        b[n] = -sum / (n + 1);
    }
    return b;
}

// B_{2k} for k = 1..12 as long doubles.
inline const std::array<Real, 12>& even_bernoulli() {
    static const std::array<Real, 12> values = [] {
        const auto table = bernoulli_table(24);
        std::array<Real, 12> out{};
        for (unsigned k = 1; k <= 12; ++k)
            out[k - 1] = static_cast<Real>(numerator(table[2 * k])) / static_cast<Real>(denominator(table[2 * k]));
        return out;
    }();
    return values;
}

/// zeta(s) by Euler-Maclaurin summation. Only used for Re s >= 1/2: further
/// left the partial sums grow like N^{-Re s} and cancel.
inline Cx zeta_em(Cx s) {
    const int n = 60 + static_cast<int>(std::abs(s));
    Cx sum = 0;
    for (int k = 1; k < n; ++k) sum += std::exp(-s * std::log(Real(k)));
    const Real big_n = n;
    const Cx n_pow = std::exp(-s * std::log(big_n));
    sum += big_n * n_pow / (s - Real(1)) + n_pow / Real(2);
    Cx rising = s; // s (s+1) ... (s + 2k - 2)
    Real factorial = 2;
    Cx power = n_pow / big_n; // N^{-s-1}
    const auto& b = even_bernoulli();
    for (unsigned k = 1; k <= 12; ++k) {
        sum += b[k - 1] / factorial * rising * power;
        rising *= (s + Real(2 * k - 1)) * (s + Real(2 * k));
        factorial *= Real(2 * k + 1) * Real(2 * k + 2);
        power /= big_n * big_n;
    }
    return sum;
}

/// Gamma(s) by the Stirling series after shifting Re s past 30.
inline Cx gamma(Cx s) {
    Cx product = 1;
    Cx w = s;
    while (w.real() < 30 || std::abs(w) < 30) {
        product *= w;
        w += Real(1);
    }
    const auto& b = even_bernoulli();
    Cx log_gamma = (w - Real(0.5)) * std::log(w) - w + std::log(2 * kPi) / 2;
    Cx w_power = w;
    const Cx w2 = w * w;
    for (unsigned k = 1; k <= 10; ++k) {
        log_gamma += b[k - 1] / (Real(2 * k) * Real(2 * k - 1) * w_power);
        w_power *= w2;
    }
    return std::exp(log_gamma) / product;
}

/// zeta(s) for s != 1: Euler-Maclaurin on the right half, the functional
/// equation zeta(s) = 2^s pi^{s-1} sin(pi s / 2) Gamma(1 - s) zeta(1 - s) on the left.
inline Cx zeta(Cx s) {
    if (s.real() >= Real(0.5)) return zeta_em(s);
    const Cx m = Real(1) - s;
    return std::exp(s * std::log(Real(2)) - m * std::log(kPi)) * std::sin(kPi * s / Real(2)) * gamma(m) * zeta_em(m);
}

/// digamma(z) = lim [ln N - sum_{n<N} 1/(n + z)], Richardson-extrapolated
/// over N = 1000, 2000, ..., 32000. Intended for Re z > 0.
inline Cx digamma(Cx z) {
    constexpr int levels = 6;
    std::array<Cx, levels> table{};
    Cx partial = 0;
    int done = 0;
    for (int i = 0; i < levels; ++i) {
        const int n = 1000 << i;
        for (; done < n; ++done) partial += Real(1) / (Real(done) + z);
        table[i] = std::log(Real(n)) - partial;
    }
    // Error expands in powers of 1/N; N doubles between levels.
    for (int m = 1; m < levels; ++m) {
        const Real factor = std::ldexp(Real(1), m);
        for (int i = levels - 1; i >= m; --i) table[i] = (factor * table[i] - table[i - 1]) / (factor - 1);
    }
    return table[levels - 1];
}

/// H_n(x) from H_n(x) = n! sum_m (-1)^m (2x)^{n-2m} / (m! (n-2m)!).
template <class T>
T hermite(unsigned n, T x) {
    T sum = 0;
    Real factorial_n = 1;
    for (unsigned k = 2; k <= n; ++k) factorial_n *= k;
    for (unsigned m = 0; 2 * m <= n; ++m) {
        Real denom = 1;
        for (unsigned k = 2; k <= m; ++k) denom *= k;
        for (unsigned k = 2; k <= n - 2 * m; ++k) denom *= k;
        const Real coefficient = (m % 2 == 0 ? 1 : -1) * factorial_n / denom;
        sum += coefficient * std::pow(T(2) * x, Real(n - 2 * m));
    }
    return sum;
}

/// Exact H_n(x) for integer x.
inline Integer hermite_exact(unsigned n, long x) {
    Integer sum = 0;
    Integer factorial_n = 1;
    for (unsigned k = 2; k <= n; ++k) factorial_n *= k;
    for (unsigned m = 0; 2 * m <= n; ++m) {
        Integer denom = 1;
        for (unsigned k = 2; k <= m; ++k) denom *= k;
        for (unsigned k = 2; k <= n - 2 * m; ++k) denom *= k;
        Integer term = factorial_n / denom * boost::multiprecision::pow(Integer(2 * x), n - 2 * m);
        sum += m % 2 == 0 ? term : Integer(-term);
    }
    return sum;
}

/// psi_j(x) = sum_{n=1}^{terms} f_{2j}(n sqrt x), fixed length.
inline Cx psi(unsigned j, Cx x, int terms = 400) {
    const Cx root = std::sqrt(x);
    Cx sum = 0;
    for (int n = terms; n >= 1; --n) {
        const Cx y = Real(n) * root;
        sum += hermite<Cx>(2 * j, std::sqrt(2 * kPi) * y) * std::exp(-kPi * y * y);
    }
    return sum / std::pow(8 * kPi, Real(j));
}

/// omega_{n,l}(t) = sum_{m=1}^{terms} m^l H_n(sqrt(2 pi t) m) exp(-pi m^2 t).
inline Cx omega(unsigned n, unsigned ell, Cx t, int terms = 400) {
    const Cx a = std::sqrt(2 * kPi * t);
    Cx sum = 0;
    for (int m = terms; m >= 1; --m)
        sum += std::pow(Real(m), Real(ell)) * hermite<Cx>(n, a * Real(m)) * std::exp(-kPi * Real(m) * Real(m) * t);
    return sum;
}

/// Exact terminating 2F1(-q, b; c; z) for rational b, c, z.
inline Rational hyp2f1(unsigned q, const Rational& b, const Rational& c, const Rational& z) {
    Rational sum = 0;
    Rational term = 1;
    for (unsigned k = 0; k <= q; ++k) {
        sum += term;
        term *= Rational(static_cast<int>(k) - static_cast<int>(q)) * (b + k) / (c + k) * z / (k + 1);
    }
    return sum;
}

/// Sum of |terms| of the sum above: the scale that rounding errors in a
/// floating-point evaluation are proportional to.
inline Rational hyp2f1_term_magnitude(unsigned q, const Rational& b, const Rational& c, const Rational& z) {
    Rational term = 1, sum = 1;
    for (unsigned k = 0; k < q; ++k) {
        term *= Rational(-static_cast<int>(q) + static_cast<int>(k)) * (b + k) / ((c + k) * (k + 1)) * z;
        sum += abs(term);
    }
    return sum;
}

/// The exact rational value of a finite double.
inline Rational exact(double x) {
    int exponent = 0;
    const double mantissa = std::frexp(x, &exponent);
    Rational r(Integer(static_cast<long long>(std::ldexp(mantissa, 53))));
    exponent -= 53;
    const Rational power(Integer(1) << std::abs(exponent));
    return exponent >= 0 ? Rational(r * power) : Rational(r / power);
}

inline double to_double(const Rational& r) {
    return static_cast<double>(static_cast<Real>(numerator(r)) / static_cast<Real>(denominator(r)));
}

/// xi(s) = s (s - 1) pi^{-s/2} Gamma(s/2) zeta(s) / 2 from the oracles above.
inline Cx xi(Cx s) {
    return s * (s - Real(1)) * std::exp(-s / Real(2) * std::log(kPi)) * gamma(s / Real(2)) * zeta(s) / Real(2);
}

} // namespace oracle
