#pragma once

// Terminating Gauss hypergeometric sums and the polynomial families built on
// them:
//
//   P_q(s)   = (-1)^q / q! * 2F1(-q, s/2; 1/2; 2)              (Hermite Mellin polynomial)
//   H_q(s)   = sum_{k<q} (-1)^k 2^{3(q-k)} / (k! (2q-2k)!) (s/2)_{q-k}   (direct form)
//   p_j(s)   = (8 pi)^{-j} (-1)^j (2j)! / j! * 2F1(-j, s/2; 1/2; 2)
//   P_n^a(s) = (1+a)_n / n! * 2F1(-n, s + a/2; a + 1; 2)         (Laguerre Mellin polynomial)
//
// with P_q(s) = H_q(s) + (-1)^q / q!. Sums are accumulated in long double with
// compensated summation; the z = 2 series alternates and cancels heavily, so
// results past q = 25 carry a precision warning.

#include <cmath>
#include <complex>
#include <numbers>
#include <optional>
#include <string>
#include <vector>

#include "xiforge/detail/compensated.hpp"
#include "xiforge/special_core.hpp"

namespace xiforge {

/// Largest degree for which polynomial values are documented as accurate.
inline constexpr unsigned kPolyValidityCeiling = 25;

/// Selects a member of a polynomial family: degree q and, for the Laguerre
/// family, the parameter alpha > -1.
class PolyFamilySpec {
public:
    explicit PolyFamilySpec(unsigned q, std::optional<double> alpha = std::nullopt) : q_(q), alpha_(alpha) {
        if (alpha_ && !(*alpha_ > -1.0)) throw DomainError("PolyFamilySpec: alpha must exceed -1");
    }

    unsigned q() const noexcept { return q_; }
    std::optional<double> alpha() const noexcept { return alpha_; }

private:
    unsigned q_;
    std::optional<double> alpha_;
};

/// A polynomial value together with the magnitude of the largest partial
/// contributions (the cancellation scale) and any precision warnings.
struct PolyValue {
    ComplexValue value;
    double term_scale = 0.0;
    std::vector<std::string> warnings;
};

namespace detail {

using Wide = long double;
using WideComplex = std::complex<Wide>;

struct WideSum {
    WideComplex value;
    Wide magnitude;
};

// sum_{k=0}^{q} (-q)_k (b)_k / (c)_k z^k / k!
inline WideSum terminating_2f1(unsigned q, WideComplex b, WideComplex c, WideComplex z) {
    for (unsigned i = 0; i < q; ++i) {
        if (std::abs(c + Wide(i)) < Wide(kPoleTolerance))
            throw DomainError("hyp2f1_terminating: (c)_k vanishes inside the summation range");
    }
    ComplexCompensatedSum<Wide> sum;
    WideComplex term = 1;
    sum.add(term);
    for (unsigned k = 0; k < q; ++k) {
        term *= (Wide(k) - Wide(q)) * (b + Wide(k)) / (c + Wide(k)) * z / Wide(k + 1);
        sum.add(term);
    }
    return {sum.value(), sum.magnitude()};
}

inline Wide inverse_factorial(unsigned n) {
    Wide value = 1;
    for (unsigned k = 2; k <= n; ++k) value /= Wide(k);
    return value;
}

inline PolyValue finish(WideComplex value, Wide scale, unsigned q, const char* what) {
    PolyValue out{narrow(value), static_cast<double>(scale), {}};
    require_finite(out.value, what);
    if (q > kPolyValidityCeiling)
        out.warnings.push_back("PrecisionWarning: degree " + std::to_string(q) + " exceeds validated ceiling " +
                               std::to_string(kPolyValidityCeiling));
    return out;
}

} // namespace detail

/// Terminating 2F1(-q, b; c; z) as an exact finite sum.
inline ComplexValue hyp2f1_terminating(unsigned q, ComplexValue b, ComplexValue c, ComplexValue z) {
    using detail::widen;
    using detail::Wide;
    const auto sum = detail::terminating_2f1(q, widen<Wide>(b), widen<Wide>(c), widen<Wide>(z));
    return detail::require_finite(detail::narrow(sum.value), "hyp2f1_terminating");
}

/// P_q(s) with its cancellation scale.
inline PolyValue P_q_detailed(unsigned q, ComplexValue s) {
    using detail::Wide;
    const auto sum = detail::terminating_2f1(q, detail::widen<Wide>(s) / Wide(2), Wide(0.5), Wide(2));
    const Wide prefactor = (q % 2 == 0 ? Wide(1) : Wide(-1)) * detail::inverse_factorial(q);
    return detail::finish(prefactor * sum.value, std::abs(prefactor) * sum.magnitude, q, "P_q");
}

inline ComplexValue P_q(unsigned q, ComplexValue s) {
    return P_q_detailed(q, s).value;
}

/// H_q(s) summed term by term from its Pochhammer form.
inline ComplexValue H_q_direct(unsigned q, ComplexValue s) {
    using detail::Wide;
    using detail::WideComplex;
    const WideComplex half_s = detail::widen<Wide>(s) / Wide(2);
    detail::ComplexCompensatedSum<Wide> sum;
    for (unsigned k = 0; k < q; ++k) {
        const unsigned r = q - k;
        Wide coefficient = std::ldexp(Wide(1), static_cast<int>(3 * r)) * detail::inverse_factorial(k) *
                           detail::inverse_factorial(2 * r);
        if (k % 2 == 1) coefficient = -coefficient;
        sum.add(coefficient * pochhammer_value<WideComplex>(half_s, r));
    }
    return detail::require_finite(detail::narrow(sum.value()), "H_q_direct");
}

/// p_j(s) = (8 pi)^{-j} (-1)^j (2j)! / j! 2F1(-j, s/2; 1/2; 2), i.e. (8 pi)^{-j} (2j)! P_j(s).
inline ComplexValue p_j(unsigned j, ComplexValue s) {
    using detail::Wide;
    const auto sum = detail::terminating_2f1(j, detail::widen<Wide>(s) / Wide(2), Wide(0.5), Wide(2));
    // (2j)!/j! accumulated as a running product to stay in range.
    Wide prefactor = j % 2 == 0 ? Wide(1) : Wide(-1);
    const Wide eight_pi = 8 * std::numbers::pi_v<Wide>;
    for (unsigned k = j + 1; k <= 2 * j; ++k) prefactor *= Wide(k) / eight_pi;
    return detail::require_finite(detail::narrow(prefactor * sum.value), "p_j");
}

/// Branch selector for the s-derivative of 2F1(-q, s/2; 1/2; 2).
enum class DerivativeForm {
    Rational, ///< nested rational sum, pole-free (default)
    Digamma,  ///< digamma differences psi(s/2 + j) - psi(s/2)
};

/// d/ds 2F1(-q, s/2; 1/2; 2).
inline ComplexValue d2F1_ds(unsigned q, ComplexValue s, DerivativeForm form = DerivativeForm::Rational) {
    using detail::Wide;
    using detail::WideComplex;
    const WideComplex sigma = detail::widen<Wide>(s) / Wide(2);

    detail::ComplexCompensatedSum<Wide> sum;
    // coefficient_j = (-q)_j / (1/2)_j * 2^j / j!
    Wide coefficient = 1;
    WideComplex rising = 1;     // (sigma)_j
    WideComplex derivative = 0; // d/dsigma (sigma)_j
    std::optional<ComplexValue> psi_sigma;
    if (form == DerivativeForm::Digamma) psi_sigma = digamma(detail::narrow(sigma));

    for (unsigned j = 1; j <= q; ++j) {
        const Wide jm1 = Wide(j - 1);
        coefficient *= (jm1 - Wide(q)) / (jm1 + Wide(0.5)) * Wide(2) / Wide(j);
        if (form == DerivativeForm::Rational) {
            derivative = derivative * (sigma + jm1) + rising;
            rising *= sigma + jm1;
            sum.add(coefficient * derivative);
        } else {
            rising *= sigma + jm1;
            const ComplexValue psi_shift = digamma(detail::narrow(sigma + Wide(j)));
            sum.add(coefficient * rising * detail::widen<Wide>(psi_shift - *psi_sigma));
        }
    }
    return detail::require_finite(detail::narrow(sum.value() / Wide(2)), "d2F1_ds");
}

/// Both forms of the s -> 0 derivative, as exact rationals.
struct DerivativeAtZeroForms {
    RationalValue half_sum;       ///< (1/2) sum_{j=1}^q (-q)_j / (1/2)_j 2^j / j
    RationalValue three_f_two;    ///< -2q 3F2(1-q, 1, 1; 3/2, 2; 2)
};

inline DerivativeAtZeroForms deriv_2F1_at_zero_forms(unsigned q) {
    RationalValue half_sum = 0;
    RationalValue ratio = 1; // (-q)_j / (1/2)_j * 2^j
    for (unsigned j = 1; j <= q; ++j) {
        ratio *= RationalValue(2 * (static_cast<int>(j) - 1 - static_cast<int>(q)), 1) /
                 RationalValue(2 * j - 1, 2);
        half_sum += ratio / j;
    }
    half_sum /= 2;

    RationalValue series = 0;
    RationalValue term = 1; // (1-q)_k (1)_k (1)_k / ((3/2)_k (2)_k) 2^k / k!
    for (unsigned k = 0; k < q; ++k) {
        series += term;
        const int kk = static_cast<int>(k);
        term *= RationalValue(1 - static_cast<int>(q) + kk) * RationalValue(kk + 1) * RationalValue(kk + 1) * 2 /
                (RationalValue(2 * kk + 3, 2) * RationalValue(kk + 2) * RationalValue(kk + 1));
    }
    return {half_sum, RationalValue(-2 * static_cast<int>(q)) * series};
}

/// d/ds 2F1(-q, s/2; 1/2; 2) at s = 0. Both closed forms are evaluated
/// exactly and must coincide.
inline double deriv_2F1_at_zero(unsigned q) {
    const auto forms = deriv_2F1_at_zero_forms(q);
    if (forms.half_sum != forms.three_f_two)
        throw std::logic_error("deriv_2F1_at_zero: half-sum and 3F2 forms disagree");
    return to_double(forms.half_sum);
}

/// Laguerre Mellin polynomial P_n^alpha(s) = (1+alpha)_n / n! 2F1(-n, s + alpha/2; alpha + 1; 2).
inline ComplexValue laguerre_mellin_poly(unsigned n, double alpha, ComplexValue s) {
    using detail::Wide;
    if (!(alpha > -1.0)) throw DomainError("laguerre_mellin_poly: alpha must exceed -1");
    const Wide a = alpha;
    const auto sum = detail::terminating_2f1(n, detail::widen<Wide>(s) + a / 2, a + 1, Wide(2));
    Wide prefactor = 1;
    for (unsigned k = 0; k < n; ++k) prefactor *= (1 + a + Wide(k)) / Wide(k + 1);
    return detail::require_finite(detail::narrow(prefactor * sum.value), "laguerre_mellin_poly");
}

/// Gamma-ratio closed form
///     2F1(-n, (alpha+1)/2; alpha+1; 2) = Gamma(1/2) Gamma(-(n+alpha)/2) / (Gamma(-alpha/2) Gamma((1-n)/2)).
/// Zero for odd n (pole of Gamma((1-n)/2)). For even n a pole of Gamma(-(n+alpha)/2)
/// is always paired with one of Gamma(-alpha/2); the ratio of the two is then
/// taken as the finite limit 1 / (-(n+alpha)/2)_{n/2}.
inline ComplexValue hyp2f1_gamma_ratio(unsigned n, double alpha) {
    if (n % 2 == 1) return 0.0;
    if (n == 0) return 1.0;

    const double upper = -(static_cast<double>(n) + alpha) / 2;
    const double lower = -alpha / 2;
    const auto near_pole = [](double x) {
        return detail::distance_to_nonpositive_integer({x, 0.0}) < kPoleTolerance;
    };

    // Gamma(1/2) / Gamma((1-n)/2) for even n: finite, nonzero.
    const auto [log_half, sign_half] = log_gamma_real(0.5);
    const auto [log_tail, sign_tail] = log_gamma_real((1.0 - static_cast<double>(n)) / 2);
    const double outer = sign_half * sign_tail * std::exp(log_half - log_tail);

    if (near_pole(upper) || near_pole(lower)) {
        if (!(near_pole(upper) && near_pole(lower)))
            throw DomainError("hyp2f1_gamma_ratio: unpaired Gamma pole");
        const double rising = pochhammer_value<double>(upper, n / 2);
        if (std::abs(rising) < kPoleTolerance)
            throw DomainError("hyp2f1_gamma_ratio: alpha + 1 is a non-positive integer inside the range");
        return outer / rising;
    }
    const auto [log_up, sign_up] = log_gamma_real(upper);
    const auto [log_low, sign_low] = log_gamma_real(lower);
    return detail::require_finite(outer * sign_up * sign_low * std::exp(log_up - log_low), "hyp2f1_gamma_ratio");
}

/// Exact monomial coefficients a_0..a_q of P_q(s) = sum_k a_k s^k.
inline std::vector<RationalValue> P_q_coefficients(unsigned q) {
    std::vector<RationalValue> coefficients(q + 1, RationalValue(0));
    // (-q)_k / (1/2)_k * 2^k / k!
    RationalValue outer = 1;
    for (unsigned k = 0; k <= q; ++k) {
        if (k > 0) {
            outer *= RationalValue(static_cast<int>(k) - 1 - static_cast<int>(q)) * 2 /
                     (RationalValue(2 * k - 1, 2) * RationalValue(k));
        }
        // (s/2)_k = sum_m c(k, m) 2^{-m} s^m
        RationalValue power_of_half = 1;
        for (unsigned m = 0; m <= k; ++m) {
            coefficients[m] += outer * stirling_first_unsigned(k, m) * power_of_half;
            power_of_half /= 2;
        }
    }
    RationalValue prefactor = RationalValue(factorial(q));
    prefactor = (q % 2 == 0 ? RationalValue(1) : RationalValue(-1)) / prefactor;
    for (auto& c : coefficients) c *= prefactor;
    return coefficients;
}

} // namespace xiforge
