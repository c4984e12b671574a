#pragma once

// Riemann zeta over the complex plane and the Hermite-weighted zeta family
//
//     zeta_{2q,l}(s) = (2q)! zeta(s - l) P_q(s),
//
// together with its special values at even positive and at non-positive
// integers and its s-derivative.
//
// zeta itself uses the alternating (Dirichlet eta) series accelerated with
// Chebyshev weights (Borwein / Cohen-Rodriguez Villegas-Zagier) for
// Re s >= 0 and the reflection formula below that.

#include <cmath>
#include <complex>
#include <numbers>
#include <string>
#include <vector>

#include "xiforge/hyper_poly.hpp"
#include "xiforge/special_core.hpp"

namespace xiforge {

namespace detail {

struct EtaValue {
    ComplexValue eta;
    ComplexValue eta_prime;
};

// Number of accelerated terms: the truncation error decays like
// (3 + sqrt 8)^{-n} but is amplified by about exp(pi |t| / 2).
inline int eta_term_count(ComplexValue s) {
    const double t = std::abs(s.imag());
    const double digits = 40.0 + 0.5 * std::numbers::pi * t + std::log(1.0 + 2.0 * t) + std::max(0.0, -s.real());
    return static_cast<int>(std::ceil(digits / std::log(3.0 + std::sqrt(8.0)))) + 2;
}

// eta(s) = sum_{k>=0} (-1)^k (k+1)^{-s}, accelerated, and its derivative.
inline EtaValue eta_accelerated(ComplexValue s, bool with_derivative) {
    const int n = eta_term_count(s);
    // d_k = n sum_{i<=k} (n+i-1)! 4^i / ((n-i)! (2i)!), normalised by d_n on the fly.
    // Only the ratios d_k / d_n matter, so the common factor is dropped.
    std::vector<double> d(n + 1);
    double term = 1.0;
    double partial = 0.0;
    for (int i = 0; i <= n; ++i) {
        if (i > 0) term *= 4.0 * (n + i - 1) * (n - i + 1) / ((2.0 * i) * (2.0 * i - 1));
        partial += term;
        d[i] = partial;
    }
    const double dn = d[n];
    ComplexCompensatedSum<double> sum;
    ComplexCompensatedSum<double> sum_prime;
    for (int k = 0; k < n; ++k) {
        const double weight = (dn - d[k]) / dn * (k % 2 == 0 ? 1.0 : -1.0);
        const double log_k1 = std::log(static_cast<double>(k + 1));
        const ComplexValue power = std::exp(-s * log_k1);
        sum.add(weight * power);
        if (with_derivative) sum_prime.add(-weight * log_k1 * power);
    }
    return {sum.value(), sum_prime.value()};
}

// 1 - 2^{1-s} and its derivative 2^{1-s} ln 2.
inline ComplexValue eta_denominator(ComplexValue s) {
    return -expm1((1.0 - s) * std::numbers::ln2);
}

// (s - 1) zeta(s) for Re s >= 0; analytic at s = 1.
inline ComplexValue zeta_times_s_minus_1(ComplexValue s) {
    const ComplexValue w = (1.0 - s) * std::numbers::ln2;
    // (s - 1) / (1 - 2^{1-s}) = (w / expm1(w)) / ln 2
    return eta_accelerated(s, false).eta * z_over_expm1(w) / std::numbers::ln2;
}

// chi(s) with zeta(s) = chi(s) zeta(1 - s), and chi'(s).
inline std::pair<ComplexValue, ComplexValue> reflection_factor(ComplexValue s, bool with_derivative) {
    const ComplexValue base = std::exp(s * std::log(2.0 * std::numbers::pi)) / std::numbers::pi;
    const ComplexValue gamma = gamma_complex(1.0 - s);
    const ComplexValue sine = sin_pi(s / 2.0);
    const ComplexValue chi = base * sine * gamma;
    if (!with_derivative) return {chi, 0.0};
    const ComplexValue cosine = cos_pi(s / 2.0);
    const ComplexValue bracket = (std::log(2.0 * std::numbers::pi) - digamma(1.0 - s)) * sine +
                                 0.5 * std::numbers::pi * cosine;
    return {chi, base * gamma * bracket};
}

inline void require_not_one(ComplexValue s, const char* what) {
    if (std::abs(s - 1.0) < kPoleTolerance) throw PoleError(std::string(what) + ": pole at s = 1");
}

} // namespace detail

/// Riemann zeta function.
inline ComplexValue zeta_complex(ComplexValue s) {
    detail::require_not_one(s, "zeta_complex");
    if (s.real() >= 0.0) {
        const ComplexValue eta = detail::eta_accelerated(s, false).eta;
        return detail::require_finite(eta / detail::eta_denominator(s), "zeta_complex");
    }
    const auto [chi, unused] = detail::reflection_factor(s, false);
    return detail::require_finite(chi * zeta_complex(1.0 - s), "zeta_complex");
}

/// zeta'(s), from the differentiated accelerated series or the differentiated
/// reflection formula.
inline ComplexValue zeta_deriv(ComplexValue s) {
    detail::require_not_one(s, "zeta_deriv");
    if (s.real() >= 0.0) {
        const auto eta = detail::eta_accelerated(s, true);
        const ComplexValue denominator = detail::eta_denominator(s);
        const ComplexValue denominator_prime = std::exp((1.0 - s) * std::numbers::ln2) * std::numbers::ln2;
        const ComplexValue zeta = eta.eta / denominator;
        return detail::require_finite((eta.eta_prime - zeta * denominator_prime) / denominator, "zeta_deriv");
    }
    const auto [chi, chi_prime] = detail::reflection_factor(s, true);
    const ComplexValue mirrored = 1.0 - s;
    return detail::require_finite(chi_prime * zeta_complex(mirrored) - chi * zeta_deriv(mirrored), "zeta_deriv");
}

/// Completed zeta pi^{-s/2} Gamma(s/2) zeta(s).
inline ComplexValue completed_zeta(ComplexValue s) {
    return std::exp(-0.5 * s * std::log(std::numbers::pi)) * gamma_complex(s / 2.0) * zeta_complex(s);
}

/// c_q = (-1)^q (2q)! / q! = H_{2q}(0).
inline BigInt c_q(unsigned q) {
    BigInt value = factorial(2 * q) / factorial(q);
    return q % 2 == 0 ? value : BigInt(-value);
}

/// Indices of a member of the zeta family. ell must be even for the Mellin
/// theorem to apply (n + ell even with n = 2q); outside Re s > 1 + ell the
/// value is an analytic continuation.
struct ZetaFamilyPoint {
    unsigned q = 0;
    unsigned ell = 0;
    ComplexValue s;

    bool theorem_parity() const noexcept { return ell % 2 == 0; }
    bool by_analytic_continuation() const noexcept { return !(s.real() > 1.0 + ell); }
};

struct FamilyValue {
    ComplexValue value;
    std::vector<std::string> warnings;
    std::vector<std::string> notes;
};

/// zeta_{2q,l}(s) with hypothesis metadata.
inline FamilyValue zeta_family_checked(const ZetaFamilyPoint& point) {
    const ComplexValue shifted = point.s - static_cast<double>(point.ell);
    if (std::abs(shifted - 1.0) < kPoleTolerance) throw PoleError("zeta_family: pole at s = 1 + ell");
    const PolyValue poly = P_q_detailed(point.q, point.s);
    FamilyValue out;
    const double leading = to_double(RationalValue(factorial(2 * point.q)));
    out.value = detail::require_finite(leading * zeta_complex(shifted) * poly.value, "zeta_family");
    out.warnings = poly.warnings;
    if (!point.theorem_parity()) out.warnings.push_back("odd ell: unverified by theorem hypotheses");
    if (point.by_analytic_continuation()) out.notes.push_back("by analytic continuation");
    return out;
}

inline ComplexValue zeta_family(unsigned q, unsigned ell, ComplexValue s) {
    return zeta_family_checked({q, ell, s}).value;
}

/// Sign of the second 2F1 parameter in the hypergeometric form of zeta_{2q,0}.
enum class HypArgSign {
    Plus,  ///< 2F1(-q, +s/2; 1/2; 2): the form that equals (2q)! zeta(s) P_q(s)
    Minus, ///< 2F1(-q, -s/2; 1/2; 2): the alternative form, kept for comparison
};

inline const char* to_string(HypArgSign sign) {
    return sign == HypArgSign::Plus ? "+s/2" : "-s/2";
}

/// c_q 2F1(-q, +-s/2; 1/2; 2) zeta(s).
inline ComplexValue zeta_family_hyp_form(unsigned q, ComplexValue s, HypArgSign sign = HypArgSign::Minus) {
    detail::require_not_one(s, "zeta_family_hyp_form");
    const ComplexValue b = (sign == HypArgSign::Plus ? 0.5 : -0.5) * s;
    const double cq = to_double(RationalValue(c_q(q)));
    return detail::require_finite(cq * hyp2f1_terminating(q, b, 0.5, 2.0) * zeta_complex(s), "zeta_family_hyp_form");
}

/// A special value r * (2 pi)^{pi_power}; r exact.
struct SpecialValue {
    RationalValue rational;
    unsigned two_pi_power = 0;

    double value() const {
        return to_double(rational) * std::pow(2.0 * std::numbers::pi, static_cast<double>(two_pi_power));
    }
};

namespace detail {

// 2F1(-q, b; 1/2; 2) for rational b, exactly.
inline RationalValue terminating_2f1_rational(unsigned q, const RationalValue& b) {
    RationalValue sum = 1;
    RationalValue term = 1;
    for (unsigned k = 0; k < q; ++k) {
        term *= RationalValue(static_cast<int>(k) - static_cast<int>(q)) * (b + k) * 2 /
                (RationalValue(2 * k + 1, 2) * RationalValue(k + 1));
        sum += term;
    }
    return sum;
}

} // namespace detail

/// zeta_{2q,0}(2m) = c_q 2F1(-q, +-m; 1/2; 2) (2 pi)^{2m} (-1)^{m+1} B_{2m} / (2 (2m)!).
inline SpecialValue special_value_even(unsigned q, unsigned m, HypArgSign sign = HypArgSign::Plus) {
    if (m == 0) throw DomainError("special_value_even: m must be positive");
    const RationalValue b = sign == HypArgSign::Plus ? RationalValue(m) : RationalValue(-static_cast<int>(m));
    RationalValue zeta_part = bernoulli(2 * m) / (2 * RationalValue(factorial(2 * m)));
    if (m % 2 == 0) zeta_part = -zeta_part;
    return {RationalValue(c_q(q)) * detail::terminating_2f1_rational(q, b) * zeta_part, 2 * m};
}

/// zeta_{2q,0}(-n) = c_q 2F1(-q, -+n/2; 1/2; 2) (-1)^n B_{n+1} / (n + 1).
inline SpecialValue special_value_neg(unsigned q, unsigned n, HypArgSign sign = HypArgSign::Plus) {
    const RationalValue half_n(static_cast<int>(n), 2);
    const RationalValue b = sign == HypArgSign::Plus ? RationalValue(-half_n) : half_n;
    RationalValue zeta_part = bernoulli(n + 1) / RationalValue(n + 1);
    if (n % 2 == 1) zeta_part = -zeta_part;
    return {RationalValue(c_q(q)) * detail::terminating_2f1_rational(q, b) * zeta_part, 0};
}

/// d/ds zeta_{2q,0}(s) = c_q [2F1 zeta'(s) + zeta(s) d/ds 2F1].
inline ComplexValue zeta_family_deriv(unsigned q, ComplexValue s) {
    detail::require_not_one(s, "zeta_family_deriv");
    const double cq = to_double(RationalValue(c_q(q)));
    const ComplexValue hyp = hyp2f1_terminating(q, s / 2.0, 0.5, 2.0);
    const ComplexValue value = cq * (hyp * zeta_deriv(s) + zeta_complex(s) * d2F1_ds(q, s));
    return detail::require_finite(value, "zeta_family_deriv");
}

} // namespace xiforge
