#pragma once

// The Riemann xi function and its integral representations built from the
// Hermite theta functions psi_j:
//
//   xi(s) = s (s - 1) pi^{-s/2} Gamma(s/2) zeta(s) / 2
//
//   Mellin:   int_0^inf psi_j(x) x^{s/2-1} dx          = p_j(s) pi^{-s/2} Gamma(s/2) zeta(s)
//             int_0^inf omega_{2q,l}(t) t^{s/2-1} dt   = pi^{-s/2} Gamma(s/2) zeta_{2q,l}(s)
//
//   split:    p_j(s) 2 xi(s) / (s (s - 1))
//               = (-1)^j int_{1/b}^inf x^{-(s+1)/2} psi_j dx + int_b^inf psi_j x^{s/2-1} dx
//                 - f_{2j}(0) [b^{s/2} / s + (-1)^j b^{(s-1)/2} / (1 - s)]          (b > 0)
//               = F_b(s) + (-1)^j F_{1/b}(1 - s)                                   (|arg b| < pi/2)
//               = F_b(s) + (-1)^j conj(F_b(1 - conj s))                           (|b| = 1)
//
//   F_b(s) = int_b^inf psi_j(x) x^{s/2-1} dx - f_{2j}(0) b^{s/2} / s.
//
// Integrals from b to infinity run along the horizontal ray x = b + u; past
// Re x = ray_cutoff the integral is replaced by an analytic tail bound that
// is folded into the error estimate. The Mellin integrals split at 1, map
// (0, 1) to (1, inf) by x -> 1/x, and below 1/ray_cutoff use the leading
// small-x behaviour of the theta series (Poisson summation), whose remainder
// is exponentially small.

#include <algorithm>
#include <cmath>
#include <complex>
#include <numbers>
#include <optional>
#include <string>
#include <vector>

#include "xiforge/hyper_poly.hpp"
#include "xiforge/quadrature.hpp"
#include "xiforge/theta_series.hpp"
#include "xiforge/zeta_engine.hpp"

namespace xiforge {

/// Margin kept from the wedge boundary |arg b| = pi/2 by every quadrature path.
inline constexpr double kWedgeMargin = 0.05;

/// Split point b of the representations; |arg b| < pi/2.
class SplitParameter {
public:
    SplitParameter(ComplexValue b) : b_(b) { // NOLINT(google-explicit-constructor)
        if (!detail::is_finite(b) || !(b.real() > 0.0))
            throw DomainError("SplitParameter: b must satisfy |arg b| < pi/2");
    }

    ComplexValue value() const noexcept { return b_; }
    bool on_unit_circle() const noexcept { return std::abs(std::abs(b_) - 1.0) < 1e-14; }

private:
    ComplexValue b_;
};

/// Riemann xi function. The completed-zeta factor is evaluated at whichever
/// of s, 1 - s has the larger real part, with (s - 1) zeta(s) kept together so
/// that s = 0, 1 and the trivial zeros need no special cases.
inline ComplexValue xi_direct(ComplexValue s) {
    const ComplexValue w = s.real() >= 0.5 ? s : 1.0 - s;
    const ComplexValue value = 0.5 * w * std::exp(-0.5 * w * std::log(std::numbers::pi)) * gamma_complex(w / 2.0) *
                               detail::zeta_times_s_minus_1(w);
    return detail::require_finite(value, "xi_direct");
}

/// p_j(s) 2 xi(s) / (s (s - 1)), the common value of the split representations.
inline ComplexValue split_target(unsigned j, ComplexValue s) {
    if (std::abs(s) < kPoleTolerance || std::abs(s - 1.0) < kPoleTolerance)
        throw DomainError("split_target: s must avoid 0 and 1");
    return p_j(j, s) * 2.0 * xi_direct(s) / (s * (s - 1.0));
}

/// xi(1/2 + it), real by the functional equation.
inline double xi_critical_section(double t) {
    return xi_direct({0.5, t}).real();
}

/// Sign changes of xi(1/2 + it) on [t_min, t_max], refined by bisection to
/// `width`. Returns the refined ordinates in increasing order.
inline std::vector<double> xi_critical_zeros(double t_min, double t_max, double step, double width = 1e-12) {
    if (!(step > 0.0) || !(t_max > t_min)) throw DomainError("xi_critical_zeros: invalid range");
    std::vector<double> zeros;
    const int points = static_cast<int>(std::ceil((t_max - t_min) / step - 1e-9));
    double t_prev = t_min;
    double f_prev = xi_critical_section(t_min);
    for (int i = 1; i <= points; ++i) {
        const double t = i == points ? t_max : t_min + i * step;
        const double f = xi_critical_section(t);
        if ((f < 0.0) != (f_prev < 0.0)) {
            double lo = t_prev, hi = t, f_lo = f_prev;
            while (hi - lo > width) {
                const double mid = 0.5 * (lo + hi);
                if (mid <= lo || mid >= hi) break;
                const double f_mid = xi_critical_section(mid);
                if ((f_mid < 0.0) == (f_lo < 0.0)) {
                    lo = mid;
                    f_lo = f_mid;
                } else {
                    hi = mid;
                }
            }
            zeros.push_back(0.5 * (lo + hi));
        }
        t_prev = t;
        f_prev = f;
    }
    return zeros;
}

namespace detail {

inline void require_tolerance(const QuadratureResult& result, const QuadratureConfig& qc, const char* what) {
    if (!(result.err_estimate <= qc.target(std::abs(result.value))))
        throw ToleranceNotMet(std::string(what) + ": error estimate " + detail::format_sci(result.err_estimate) +
                                  " exceeds requested tolerance",
                              result.err_estimate);
}

// Runs compute(piece_config) with the tolerances split over `pieces`
// integrals. The pieces may cancel, so a relative target met piecewise can
// miss the combined one; the tolerances are then tightened tenfold and the
// evaluation repeated.
template <class Compute>
QuadratureResult tighten_until_met(const QuadratureConfig& qc, int pieces, Compute&& compute, const char* what) {
    double factor = pieces;
    QuadratureResult result;
    for (int attempt = 0; attempt < 4; ++attempt, factor *= 10.0) {
        const QuadratureConfig piece{qc.abs_tol() / factor, qc.rel_tol() / factor, qc.max_subdivisions(),
                                     qc.ray_cutoff()};
        result = compute(piece);
        if (result.err_estimate <= qc.target(std::abs(result.value))) return result;
    }
    require_tolerance(result, qc, what);
    return result;
}

inline int oscillation_panels(ComplexValue exponent, double from, double to, double length) {
    const double turns = std::abs(exponent.imag()) * std::log(std::max(to, 1.0) / std::max(from, 1e-3)) / std::numbers::pi;
    return std::max(4, static_cast<int>(std::ceil(turns + length)));
}

// Bound on int over the ray beyond `start` of |psi_j(x)| |x|^p e^{angle}.
// Along a horizontal ray Re x grows at unit rate; every theta term decays at
// least like e^{-pi Re x} while |x|^p and the Hermite factor grow at most like
// |x|^{p + j}.
inline double ray_tail_bound(unsigned j, ComplexValue start, double p, double angular_factor) {
    const double kappa = std::numbers::pi - (j + std::max(p, 0.0)) / start.real();
    if (!(kappa > 0.0)) return INFINITY;
    const double magnitude = psi_magnitude_bound(j, std::abs(start), start.real()) * std::pow(std::abs(start), p);
    return magnitude * angular_factor / kappa;
}

// int_{start}^{inf} psi_j(x) x^{exponent} dx along x = start + u.
inline QuadratureResult ray_integral(unsigned j, ComplexValue start, ComplexValue exponent,
                                     const QuadratureConfig& qc, const SeriesControl& ctl) {
    const double length = std::max(qc.ray_cutoff() - start.real(), 1.0);
    auto integrand = [&](double u) {
        const ComplexValue x = start + u;
        return psi_j(j, ThetaArgument(x), ctl) * std::exp(exponent * std::log(x));
    };
    const int panels = oscillation_panels(exponent, std::abs(start), std::abs(start) + length, length);
    QuadratureResult result = integrate_adaptive(integrand, 0.0, length, qc, panels);
    const ComplexValue end = start + length;
    const double angular = std::exp(std::abs(exponent.imag()) * std::abs(std::arg(start)));
    const double series_error = ctl.tail_tol() * length * std::max(1.0, std::pow(std::abs(start), exponent.real()) * angular);
    result.err_estimate += ray_tail_bound(j, end, exponent.real(), angular) + series_error;
    return result;
}

// Same integral along the radial path x = start * v, v >= 1.
inline QuadratureResult radial_integral(unsigned j, ComplexValue start, ComplexValue exponent,
                                        const QuadratureConfig& qc, const SeriesControl& ctl) {
    const double v_end = std::max(qc.ray_cutoff() / start.real(), 2.0);
    auto integrand = [&](double v) {
        const ComplexValue x = start * v;
        return psi_j(j, ThetaArgument(x), ctl) * std::exp(exponent * std::log(x)) * start;
    };
    const int panels = oscillation_panels(exponent, std::abs(start), std::abs(start) * v_end, v_end);
    QuadratureResult result = integrate_adaptive(integrand, 1.0, v_end, qc, panels);
    const ComplexValue end = start * v_end;
    const double p = exponent.real();
    const double angular = std::exp(std::abs(exponent.imag()) * std::abs(std::arg(start)));
    const double kappa = std::numbers::pi * start.real() - (j + std::max(p, 0.0)) / v_end;
    const double magnitude = psi_magnitude_bound(j, std::abs(end), end.real()) * std::pow(std::abs(end), p);
    result.err_estimate += kappa > 0.0 ? magnitude * angular * std::abs(start) / kappa : INFINITY;
    result.err_estimate += ctl.tail_tol() * v_end * std::abs(start);
    return result;
}

inline ComplexValue principal_power(ComplexValue base, ComplexValue exponent) {
    return std::exp(exponent * std::log(base));
}

} // namespace detail

/// int_0^inf psi_j(x) x^{s/2-1} dx for Re s > 1.
inline QuadratureResult mellin_psi_integral(unsigned j, ComplexValue s, const QuadratureConfig& qc = {},
                                            const SeriesControl& ctl = {}) {
    if (!(s.real() > 1.0)) throw DomainError("mellin_psi_integral: requires Re s > 1");
    const double cutoff = qc.ray_cutoff();
    const ComplexValue upper_exponent = s / 2.0 - 1.0;
    const ComplexValue lower_exponent = -s / 2.0 - 1.0;

    auto upper = [&](double x) { return psi_j(j, ThetaArgument(x), ctl) * std::pow(x, upper_exponent); };
    auto lower = [&](double y) { return psi_j(j, ThetaArgument(1.0 / y), ctl) * std::pow(y, lower_exponent); };
    const int panels = detail::oscillation_panels(upper_exponent, 1.0, cutoff, cutoff - 1.0);
    QuadratureResult result = detail::tighten_until_met(qc, 2, [&](const QuadratureConfig& piece) {
        QuadratureResult sum = integrate_adaptive(upper, 1.0, cutoff, piece, panels);
        sum += integrate_adaptive(lower, 1.0, cutoff, piece, panels);
        return sum;
    }, "mellin_psi_integral");

    // psi_j(x) = ((-1)^j x^{-1/2} - 1) f_{2j}(0) / 2 + (-1)^j x^{-1/2} psi_j(1/x); the last
    // term is below the bound of int_X^inf |psi_j(y)| y^{-sigma/2-1/2} dy on (0, 1/X).
    const double sign = j % 2 == 0 ? 1.0 : -1.0;
    const double f0 = f_2j_at_zero(j);
    const ComplexValue small_x = 0.5 * f0 *
                                 (sign * 2.0 / (s - 1.0) * std::pow(cutoff, -(s - 1.0) / 2.0) -
                                  2.0 / s * std::pow(cutoff, -s / 2.0));
    result.value += small_x;
    const double sigma = s.real();
    result.err_estimate += detail::ray_tail_bound(j, cutoff, sigma / 2.0 - 1.0, 1.0) +
                           detail::ray_tail_bound(j, cutoff, -sigma / 2.0 - 0.5, 1.0) +
                           2.0 * ctl.tail_tol() * cutoff;
    detail::require_tolerance(result, qc, "mellin_psi_integral");
    return result;
}

/// Leading small-t coefficient C of omega_{2q,l}(t) ~ C t^{-(l+1)/2} / 2 - delta_{l0} H_{2q}(0) / 2:
/// C = int over the real line of y^l H_{2q}(sqrt(2 pi) y) exp(-pi y^2) dy.
inline double omega_small_t_constant(unsigned q, unsigned ell) {
    using detail::WideReal;
    const WideReal pi = std::numbers::pi_v<WideReal>;
    WideReal total = 0;
    for (unsigned k = 0; k <= q; ++k) {
        const unsigned r = q - k; // power of (8 pi y^2)
        WideReal coefficient = static_cast<WideReal>(to_double(RationalValue(
                                   factorial(2 * q) / (factorial(k) * factorial(2 * r))))) *
                               std::pow(8 * pi, WideReal(r));
        if (k % 2 == 1) coefficient = -coefficient;
        // int y^{2m} exp(-pi y^2) dy = Gamma(m + 1/2) / pi^{m + 1/2}
        const WideReal m = WideReal(ell) / 2 + r;
        total += coefficient * std::tgamma(m + WideReal(0.5)) / std::pow(pi, m + WideReal(0.5));
    }
    return static_cast<double>(total);
}

/// int_0^inf omega_{2q,l}(t) t^{s/2-1} dt for even l and Re s > 1 + l.
inline QuadratureResult mellin_omega_integral(unsigned q, unsigned ell, ComplexValue s,
                                              const QuadratureConfig& qc = {}, const SeriesControl& ctl = {}) {
    if (ell % 2 != 0) throw DomainError("mellin_omega_integral: ell must be even");
    if (!(s.real() > 1.0 + ell)) throw DomainError("mellin_omega_integral: requires Re s > 1 + ell");
    const double cutoff = qc.ray_cutoff();
    const unsigned n = 2 * q;
    const ComplexValue upper_exponent = s / 2.0 - 1.0;
    const ComplexValue lower_exponent = -s / 2.0 - 1.0;

    auto upper = [&](double t) { return omega(n, ell, t, ctl).value * std::pow(t, upper_exponent); };
    auto lower = [&](double y) { return omega(n, ell, 1.0 / y, ctl).value * std::pow(y, lower_exponent); };
    const int panels = detail::oscillation_panels(upper_exponent, 1.0, cutoff, cutoff - 1.0);
    QuadratureResult result = detail::tighten_until_met(qc, 2, [&](const QuadratureConfig& piece) {
        QuadratureResult sum = integrate_adaptive(upper, 1.0, cutoff, piece, panels);
        sum += integrate_adaptive(lower, 1.0, cutoff, piece, panels);
        return sum;
    }, "mellin_omega_integral");

    const double constant = omega_small_t_constant(q, ell);
    const double h0 = ell == 0 ? hermite(n, 0.0) : 0.0;
    const ComplexValue shifted = s - static_cast<double>(ell) - 1.0;
    result.value += constant / shifted * std::pow(cutoff, -shifted / 2.0) - h0 / s * std::pow(cutoff, -s / 2.0);

    // Tails: above the cutoff every term decays like exp(-pi m^2 t); below
    // 1/cutoff the Poisson remainder is estimated from its value at 1/cutoff,
    // where it is largest.
    const double t0 = 1.0 / cutoff;
    const double asymptotic_t0 = 0.5 * constant * std::pow(t0, -(ell + 1.0) / 2.0) - 0.5 * h0;
    const double remainder_t0 = std::abs(omega(n, ell, t0, ctl).value - asymptotic_t0);
    const double sigma = s.real();
    detail::HermiteThetaTerms envelope{n, ell, std::sqrt(2 * std::numbers::pi_v<detail::WideReal> * cutoff),
                                       detail::WideReal(cutoff), 1, 1};
    const double kappa = std::numbers::pi - (q + std::max(sigma / 2.0 - 1.0, 0.0)) / cutoff;
    const double head = static_cast<double>(detail::theta_envelope(envelope, 1) + detail::theta_tail_bound(envelope, 2));
    result.err_estimate += (kappa > 0.0 ? head * std::pow(cutoff, sigma / 2.0 - 1.0) / kappa : INFINITY) +
                           remainder_t0 * std::pow(t0, sigma / 2.0) / (sigma / 2.0) +
                           2.0 * ctl.tail_tol() * cutoff;
    detail::require_tolerance(result, qc, "mellin_omega_integral");
    return result;
}

/// Integration path from b to infinity.
enum class RayPath {
    Horizontal, ///< x = b + u, u >= 0
    Radial,     ///< x = b v, v >= 1
};

/// F_b(s) = int_b^inf psi_j(x) x^{s/2-1} dx - f_{2j}(0) b^{s/2} / s.
inline QuadratureResult F_b(unsigned j, ComplexValue s, const SplitParameter& b, const QuadratureConfig& qc = {},
                            RayPath path = RayPath::Horizontal, const SeriesControl& ctl = {}) {
    if (std::abs(s) < kPoleTolerance) throw DomainError("F_b: s must avoid 0");
    const ComplexValue bv = b.value();
    if (std::abs(std::arg(bv)) > std::numbers::pi / 2 - kWedgeMargin)
        throw DomainError("F_b: |arg b| exceeds pi/2 - 0.05");
    const ComplexValue correction = f_2j_at_zero(j) * detail::principal_power(bv, s / 2.0) / s;
    return detail::tighten_until_met(qc, 1, [&](const QuadratureConfig& piece) {
        QuadratureResult result = path == RayPath::Horizontal
                                      ? detail::ray_integral(j, bv, s / 2.0 - 1.0, piece, ctl)
                                      : detail::radial_integral(j, bv, s / 2.0 - 1.0, piece, ctl);
        result.value -= correction;
        return result;
    }, "F_b");
}

/// Right-hand side of the split representation for real b > 0.
inline QuadratureResult xi_prop3(unsigned j, ComplexValue s, double b, const QuadratureConfig& qc = {},
                                 const SeriesControl& ctl = {}) {
    if (!(b > 0.0)) throw DomainError("xi_prop3: b must be positive");
    if (std::abs(s) < kPoleTolerance || std::abs(s - 1.0) < kPoleTolerance)
        throw DomainError("xi_prop3: s must avoid 0 and 1");
    const double sign = j % 2 == 0 ? 1.0 : -1.0;
    const ComplexValue bb = b;
    const ComplexValue correction = f_2j_at_zero(j) * (detail::principal_power(bb, s / 2.0) / s +
                                                       sign * detail::principal_power(bb, (s - 1.0) / 2.0) / (1.0 - s));
    return detail::tighten_until_met(qc, 2, [&](const QuadratureConfig& piece) {
        QuadratureResult inverted = detail::ray_integral(j, 1.0 / b, -(s + 1.0) / 2.0, piece, ctl);
        QuadratureResult result = detail::ray_integral(j, bb, s / 2.0 - 1.0, piece, ctl);
        inverted.value *= sign;
        result += inverted;
        result.value -= correction;
        return result;
    }, "xi_prop3");
}

enum class Prop4Form {
    Inversion, ///< F_b(s) + (-1)^j F_{1/b}(1 - s)
    Conjugate, ///< F_b(s) + (-1)^j conj(F_b(1 - conj s)), |b| = 1 only
};

inline const char* to_string(Prop4Form form) {
    return form == Prop4Form::Inversion ? "i" : "ii";
}

/// Wedge form of the split representation.
inline QuadratureResult xi_prop4(unsigned j, ComplexValue s, const SplitParameter& b,
                                 Prop4Form form = Prop4Form::Inversion, const QuadratureConfig& qc = {},
                                 const SeriesControl& ctl = {}) {
    if (std::abs(s) < kPoleTolerance || std::abs(s - 1.0) < kPoleTolerance)
        throw DomainError("xi_prop4: s must avoid 0 and 1");
    if (form == Prop4Form::Conjugate && !b.on_unit_circle())
        throw FormError("xi_prop4: form (ii) requires |b| = 1");
    const double sign = j % 2 == 0 ? 1.0 : -1.0;
    return detail::tighten_until_met(qc, 2, [&](const QuadratureConfig& piece) {
        QuadratureResult result = F_b(j, s, b, piece, RayPath::Horizontal, ctl);
        QuadratureResult mirrored =
            form == Prop4Form::Inversion
                ? F_b(j, 1.0 - s, SplitParameter(1.0 / b.value()), piece, RayPath::Horizontal, ctl)
                : F_b(j, 1.0 - std::conj(s), b, piece, RayPath::Horizontal, ctl);
        if (form == Prop4Form::Conjugate) mirrored.value = std::conj(mirrored.value);
        mirrored.value *= sign;
        result += mirrored;
        return result;
    }, "xi_prop4");
}

/// One evaluated representation in a report.
struct ReportCell {
    std::string label;
    unsigned j = 0;
    ComplexValue b;
    std::optional<QuadratureResult> result;
    ComplexValue target;
    double deviation = 0.0; ///< |value - target|; NaN when evaluation failed
    std::string error;
};

struct RepresentationReport {
    ComplexValue s;
    ComplexValue xi;
    std::vector<ReportCell> cells;
    double max_pairwise_deviation = 0.0; ///< within each j, maximised over j
    double max_target_deviation = 0.0;
    int failures = 0;
};

/// Evaluate xi_direct and every applicable split representation for each
/// (j, b): xi_prop3 for real positive b, form (i) always, form (ii) on the
/// unit circle. Cell failures are recorded, not propagated. Cells are
/// evaluated in list order.
inline RepresentationReport representation_report(ComplexValue s, const std::vector<unsigned>& j_list,
                                                  const std::vector<ComplexValue>& b_list,
                                                  const QuadratureConfig& qc = {}) {
    RepresentationReport report;
    report.s = s;
    report.xi = xi_direct(s);
    for (unsigned j : j_list) {
        std::optional<ComplexValue> target;
        try {
            target = split_target(j, s);
        } catch (const Error&) {
        }
        std::vector<ComplexValue> values;
        for (const ComplexValue& b : b_list) {
            auto evaluate = [&](const std::string& label, auto&& compute) {
                ReportCell cell;
                cell.label = label;
                cell.j = j;
                cell.b = b;
                try {
                    cell.result = compute();
                    if (target) {
                        cell.target = *target;
                        cell.deviation = std::abs(cell.result->value - *target);
                        report.max_target_deviation = std::max(report.max_target_deviation, cell.deviation);
                    }
                    values.push_back(cell.result->value);
                } catch (const Error& e) {
                    cell.error = e.what();
                    cell.deviation = NAN;
                    ++report.failures;
                }
                report.cells.push_back(std::move(cell));
            };
            if (b.imag() == 0.0 && b.real() > 0.0)
                evaluate("prop3", [&] { return xi_prop3(j, s, b.real(), qc); });
            evaluate("prop4-i", [&] { return xi_prop4(j, s, SplitParameter(b), Prop4Form::Inversion, qc); });
            if (std::abs(std::abs(b) - 1.0) < 1e-14)
                evaluate("prop4-ii", [&] { return xi_prop4(j, s, SplitParameter(b), Prop4Form::Conjugate, qc); });
        }
        for (std::size_t a = 0; a < values.size(); ++a)
            for (std::size_t c = a + 1; c < values.size(); ++c)
                report.max_pairwise_deviation = std::max(report.max_pairwise_deviation, std::abs(values[a] - values[c]));
    }
    return report;
}

} // namespace xiforge
