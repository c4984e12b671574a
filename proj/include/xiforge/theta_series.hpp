#pragma once

// Hermite-weighted theta series.
//
//   omega_{n,l}(t) = sum_{m>=1} m^l H_n(sqrt(2 pi t) m) exp(-pi m^2 t)
//   f_n(x)         = (8 pi)^{-n/2} H_n(sqrt(2 pi) x) exp(-pi x^2)
//   psi_j(x)       = sum_{n>=1} f_{2j}(n sqrt x) = (theta_j(x) - f_{2j}(0)) / 2
//
// where theta_j(x) = sum over all integers n of f_{2j}(n sqrt x). Square roots
// are principal. Every series is summed until a rigorous bound on the
// remaining tail drops below SeriesControl::tail_tol: the terms are majorised
// by m^l G_n(|a| m) exp(-pi m^2 Re u), with G_n the Hermite polynomial with
// all coefficients made positive, and past the peak of that envelope the
// tail is dominated by a geometric series.

#include <cmath>
#include <complex>
#include <numbers>
#include <string>
#include <utility>

#include "xiforge/detail/compensated.hpp"
#include "xiforge/special_core.hpp"

namespace xiforge {

/// Truncation policy for the infinite theta sums.
class SeriesControl {
public:
    static constexpr double kDefaultTailTol = 1e-14;
    static constexpr int kDefaultMaxTerms = 10000;

    SeriesControl() = default;
    SeriesControl(double tail_tol, int max_terms) : tail_tol_(tail_tol), max_terms_(max_terms) {
        if (!(tail_tol > 0.0)) throw DomainError("SeriesControl: tail_tol must be positive");
        if (max_terms < 1) throw DomainError("SeriesControl: max_terms must be at least 1");
    }

    double tail_tol() const noexcept { return tail_tol_; }
    int max_terms() const noexcept { return max_terms_; }

private:
    double tail_tol_ = kDefaultTailTol;
    int max_terms_ = kDefaultMaxTerms;
};

/// A point of the open right half-plane |arg x| < pi/2.
class ThetaArgument {
public:
    ThetaArgument(ComplexValue x) : x_(x) { // NOLINT(google-explicit-constructor)
        if (!detail::is_finite(x) || !(x.real() > 0.0))
            throw DomainError("ThetaArgument: x must lie in the open right half-plane");
    }

    ComplexValue value() const noexcept { return x_; }

private:
    ComplexValue x_;
};

struct SeriesValue {
    ComplexValue value;
    int terms = 0;
    double tail_bound = 0.0;
};

namespace detail {

using WideReal = long double;
using WideCx = std::complex<WideReal>;

// Terms m^l H_n(a m) exp(-pi m^2 u) for m = first, first + step, ...
struct HermiteThetaTerms {
    unsigned n = 0;
    unsigned ell = 0;
    WideCx a;
    WideCx u;
    unsigned first = 1;
    unsigned step = 1;
};

inline WideReal theta_envelope(const HermiteThetaTerms& spec, WideReal m) {
    const WideReal pi = std::numbers::pi_v<WideReal>;
    return std::pow(m, WideReal(spec.ell)) * hermite_envelope<WideReal>(spec.n, std::abs(spec.a) * m) *
           std::exp(-pi * m * m * spec.u.real());
}

// Upper bound on sum_{m >= next} |term(m)|, or +inf before the envelope peak.
inline WideReal theta_tail_bound(const HermiteThetaTerms& spec, WideReal next) {
    const WideReal pi = std::numbers::pi_v<WideReal>;
    const WideReal h = spec.step;
    const WideReal rho = std::pow((next + h) / next, WideReal(spec.ell + spec.n)) *
                         std::exp(-pi * spec.u.real() * ((next + h) * (next + h) - next * next));
    if (!(rho < 1)) return INFINITY;
    return theta_envelope(spec, next) / (1 - rho);
}

struct WideSeriesValue {
    WideCx value;
    int terms = 0;
    WideReal tail_bound = 0;
};

inline WideSeriesValue hermite_theta_sum_wide(const HermiteThetaTerms& spec, WideReal tolerance, int max_terms,
                                              const char* what) {
    if (!(spec.u.real() > 0)) throw DomainError(std::string(what) + ": series requires a positive real part");
    const WideReal pi = std::numbers::pi_v<WideReal>;
    ComplexCompensatedSum<WideReal> sum;
    WideReal bound = INFINITY;
    int count = 0;
    for (unsigned m = spec.first;; m += spec.step) {
        if (count >= max_terms) {
            throw ConvergenceError(std::string(what) + ": term cap reached with tail bound " +
                                       detail::format_sci(static_cast<double>(bound)),
                                   static_cast<double>(bound));
        }
        const WideReal mm = m;
        const WideCx term = std::pow(mm, WideReal(spec.ell)) * hermite_value<WideCx>(spec.n, spec.a * mm) *
                            std::exp(-pi * mm * mm * spec.u);
        sum.add(term);
        ++count;
        bound = theta_tail_bound(spec, mm + spec.step);
        if (bound < tolerance) break;
    }
    return {sum.value(), count, bound};
}

inline SeriesValue hermite_theta_sum(const HermiteThetaTerms& spec, WideReal tolerance, int max_terms,
                                     const char* what) {
    const auto wide = hermite_theta_sum_wide(spec, tolerance, max_terms, what);
    return {narrow(wide.value), wide.terms, static_cast<double>(wide.tail_bound)};
}

inline WideReal eight_pi_power(unsigned j) {
    return std::pow(8 * std::numbers::pi_v<WideReal>, WideReal(j));
}

inline WideCx sqrt_two_pi_times(ComplexValue x) {
    return std::sqrt(2 * std::numbers::pi_v<WideReal> * widen<WideReal>(x));
}

} // namespace detail

/// f_n(x) = (8 pi)^{-n/2} H_n(sqrt(2 pi) x) exp(-pi x^2).
inline ComplexValue f_n(unsigned n, ComplexValue x) {
    using detail::WideCx;
    using detail::WideReal;
    const WideReal pi = std::numbers::pi_v<WideReal>;
    const WideCx wx = detail::widen<WideReal>(x);
    const WideCx value = std::pow(8 * pi, -WideReal(n) / 2) * hermite_value<WideCx>(n, std::sqrt(2 * pi) * wx) *
                         std::exp(-pi * wx * wx);
    return detail::require_finite(detail::narrow(value), "f_n");
}

/// f_{2j}(0) = (-1)^j (4 pi)^{-j} (2j - 1)!!.
inline double f_2j_at_zero(unsigned j) {
    const double magnitude =
        to_double(RationalValue(double_factorial(2 * static_cast<int>(j) - 1))) * std::pow(4.0 * std::numbers::pi, -double(j));
    return j % 2 == 0 ? magnitude : -magnitude;
}

/// omega_{n,l}(t) for even n and Re t > 0.
inline SeriesValue omega(unsigned n, unsigned ell, ComplexValue t, const SeriesControl& ctl = {}) {
    if (n % 2 != 0) throw DomainError("omega: n must be even");
    if (!(t.real() > 0.0)) throw DomainError("omega: Re t must be positive");
    detail::HermiteThetaTerms spec{n, ell, detail::sqrt_two_pi_times(t), detail::widen<detail::WideReal>(t), 1, 1};
    auto out = detail::hermite_theta_sum(spec, ctl.tail_tol(), ctl.max_terms(), "omega");
    detail::require_finite(out.value, "omega");
    return out;
}

namespace detail {

inline WideSeriesValue psi_j_wide(unsigned j, WideCx x, const SeriesControl& ctl) {
    const WideReal pi = std::numbers::pi_v<WideReal>;
    HermiteThetaTerms spec{2 * j, 0, std::sqrt(2 * pi * x), x, 1, 1};
    const WideReal scale = eight_pi_power(j);
    auto out = hermite_theta_sum_wide(spec, ctl.tail_tol() * scale, ctl.max_terms(), "psi_j");
    out.value /= scale;
    out.tail_bound /= scale;
    return out;
}

} // namespace detail

/// psi_j(x) with term count and achieved tail bound.
inline SeriesValue psi_j_series(unsigned j, ThetaArgument x, const SeriesControl& ctl = {}) {
    const auto wide = detail::psi_j_wide(j, detail::widen<detail::WideReal>(x.value()), ctl);
    SeriesValue out{detail::narrow(wide.value), wide.terms, static_cast<double>(wide.tail_bound)};
    detail::require_finite(out.value, "psi_j");
    return out;
}

inline ComplexValue psi_j(unsigned j, ThetaArgument x, const SeriesControl& ctl = {}) {
    return psi_j_series(j, x, ctl).value;
}

/// (1/2)[sum over all integers n of f_{2j}(n sqrt x) - f_{2j}(0)], summed
/// symmetrically from -N to N with f_n itself.
inline ComplexValue psi_j_symmetric(unsigned j, ThetaArgument x, const SeriesControl& ctl = {}) {
    const int n_max = psi_j_series(j, x, ctl).terms + 2;
    const ComplexValue root = std::sqrt(x.value());
    detail::ComplexCompensatedSum<double> sum;
    for (int n = -n_max; n <= n_max; ++n) sum.add(f_n(2 * j, static_cast<double>(n) * root));
    return 0.5 * (sum.value() - f_n(2 * j, 0.0));
}

/// |psi_j(x) - [(-1)^j x^{-1/2} psi_j(1/x) + ((-1)^j x^{-1/2} - 1) f_{2j}(0) / 2]|.
inline double lemma1_residual(unsigned j, ThetaArgument x, const SeriesControl& ctl = {}) {
    using detail::WideCx;
    using detail::WideReal;
    // Both sides stay in extended precision; rounding psi_j to double alone
    // would exceed the tail tolerance once |psi_j| is in the hundreds.
    const WideCx xv = detail::widen<WideReal>(x.value());
    const WideReal sign = j % 2 == 0 ? 1 : -1;
    const WideCx inv_root = WideReal(1) / std::sqrt(xv);
    const WideReal f0 = f_2j_at_zero(j);
    const WideCx lhs = detail::psi_j_wide(j, xv, ctl).value;
    const WideCx rhs = sign * inv_root * detail::psi_j_wide(j, WideReal(1) / xv, ctl).value +
                       WideReal(0.5) * (sign * inv_root - WideReal(1)) * f0;
    const double residual = static_cast<double>(std::abs(lhs - rhs));
    if (!std::isfinite(residual)) throw OverflowError("lemma1_residual: non-finite residual");
    return residual;
}

/// psi_j(x) evaluated directly and recombined from the odd/even split around
/// x = i:  (8 pi)^{-j} [ -sum_{n odd} H_{2j}(sqrt(2 pi x) n) e^{-pi n^2 (x - i)}
///                       + sum_{k>=1} H_{2j}(sqrt(2 pi x) 2k) e^{-4 pi k^2 (x - i)} ].
inline std::pair<ComplexValue, ComplexValue> near_i_decomposition(unsigned j, ThetaArgument x,
                                                                  const SeriesControl& ctl = {}) {
    const ComplexValue xv = x.value();
    const ComplexValue direct = psi_j(j, x, ctl);

    const detail::WideCx a = detail::sqrt_two_pi_times(xv);
    const detail::WideCx shifted = detail::widen<detail::WideReal>(xv - ComplexValue(0.0, 1.0));
    const detail::WideReal scale = detail::eight_pi_power(j);
    const detail::WideReal tolerance = ctl.tail_tol() * scale / 2;

    const auto odd = detail::hermite_theta_sum({2 * j, 0, a, shifted, 1, 2}, tolerance, ctl.max_terms(),
                                               "near_i_decomposition");
    const auto even = detail::hermite_theta_sum({2 * j, 0, a, shifted, 2, 2}, tolerance, ctl.max_terms(),
                                                "near_i_decomposition");
    const ComplexValue recombined = (even.value - odd.value) / static_cast<double>(scale);
    return {direct, recombined};
}

/// Upper bound on |psi_j(x)| using |x| and Re x only.
inline double psi_magnitude_bound(unsigned j, double abs_x, double re_x) {
    if (!(re_x > 0.0)) return INFINITY;
    using detail::WideReal;
    detail::HermiteThetaTerms spec{2 * j, 0, std::sqrt(2 * std::numbers::pi_v<WideReal> * WideReal(abs_x)),
                                   WideReal(re_x), 1, 1};
    WideReal total = 0;
    for (unsigned m = 1; m < 100000; ++m) {
        total += detail::theta_envelope(spec, m);
        const WideReal tail = detail::theta_tail_bound(spec, m + 1);
        if (tail < total * WideReal(1e-3)) return static_cast<double>((total + tail) / detail::eight_pi_power(j));
    }
    return INFINITY;
}

} // namespace xiforge
