#pragma once

// Zeros of P_q on the critical line Re s = 1/2.
//
// P_q(s) = (-1)^q P_q(1 - s) and real coefficients make P_q(1/2 + it) real for
// even q and purely imaginary for odd q, so its zeros there are sign changes
// of a real function of t. Counting them (t > 0 twice, t = 0 once) against the
// degree q shows whether every zero lies on the line.

#include <algorithm>
#include <cmath>
#include <limits>
#include <optional>
#include <string>
#include <vector>

#include "xiforge/hyper_poly.hpp"

namespace xiforge {

inline constexpr double kDefaultZeroGridStep = 0.01;
inline constexpr double kMinimumScanRange = 30.0;
inline constexpr double kBracketWidth = 1e-12;

struct ZeroRecord {
    unsigned q = 0;
    double t = 0.0;             ///< zero at s = 1/2 + it
    double residual = 0.0;      ///< |P_q(1/2 + it)| at the refined point
    double bracket_width = 0.0;
    double scale = 0.0;         ///< cancellation scale of P_q at the refined point
};

/// Re P_q(1/2 + it) for even q, Im P_q(1/2 + it) for odd q.
inline double critical_line_section(unsigned q, double t) {
    const ComplexValue value = P_q(q, {0.5, t});
    return q % 2 == 0 ? value.real() : value.imag();
}

/// Fujiwara bound on |t| over the zeros of t -> P_q(1/2 + it), from the exact
/// coefficients of P_q.
inline double critical_ordinate_bound(unsigned q) {
    if (q == 0) return 0.0;
    const auto a = P_q_coefficients(q);
    // P_q(1/2 + it) = sum_k i^k r_k t^k with r_k = sum_{m>=k} a_m C(m, k) 2^{k-m}.
    std::vector<double> r(q + 1);
    for (unsigned k = 0; k <= q; ++k) {
        RationalValue total = 0;
        RationalValue half_power = 1;
        for (unsigned m = k; m <= q; ++m) {
            total += a[m] * RationalValue(binomial(m, k)) * half_power;
            half_power /= 2;
        }
        r[k] = std::abs(to_double(total));
    }
    double bound = 0.0;
    for (unsigned k = 1; k <= q; ++k) {
        const double ratio = r[q - k] / r[q] / (k == q ? 2.0 : 1.0);
        bound = std::max(bound, std::pow(ratio, 1.0 / k));
    }
    return 2.0 * bound;
}

/// Scan range used when none is given: at least 30, widened to the Fujiwara
/// bound so that no zero can lie beyond it.
inline double default_scan_range(unsigned q) {
    return std::max(kMinimumScanRange, std::ceil(critical_ordinate_bound(q)));
}

namespace detail {

inline ZeroRecord refine_zero(unsigned q, double lo, double hi, double f_lo) {
    while (hi - lo > kBracketWidth) {
        const double mid = 0.5 * (lo + hi);
        if (mid <= lo || mid >= hi) break;
        const double f_mid = critical_line_section(q, mid);
        if (f_mid == 0.0) {
            lo = hi = mid;
            break;
        }
        if ((f_mid < 0.0) == (f_lo < 0.0)) {
            lo = mid;
            f_lo = f_mid;
        } else {
            hi = mid;
        }
    }
    const double t = 0.5 * (lo + hi);
    const PolyValue value = P_q_detailed(q, {0.5, t});
    return {q, t, std::abs(value.value), hi - lo, value.term_scale};
}

inline void scan_interval(unsigned q, double from, double to, double step, int depth, std::vector<ZeroRecord>& out) {
    const int points = std::max(1, static_cast<int>(std::ceil((to - from) / step - 1e-9)));
    double t_prev = from;
    PolyValue prev = P_q_detailed(q, {0.5, from});
    double f_prev = q % 2 == 0 ? prev.value.real() : prev.value.imag();
    for (int i = 1; i <= points; ++i) {
        const double t = i == points ? to : from + i * step;
        const PolyValue cur = P_q_detailed(q, {0.5, t});
        const double f = q % 2 == 0 ? cur.value.real() : cur.value.imag();
        if (f == 0.0) {
            out.push_back({q, t, std::abs(cur.value), 0.0, cur.term_scale});
        } else if (f_prev != 0.0 && (f < 0.0) != (f_prev < 0.0)) {
            out.push_back(refine_zero(q, t_prev, t, f_prev));
        } else if (depth == 0 && std::abs(f) < 1e-13 * cur.term_scale && std::abs(f_prev) < 1e-13 * prev.term_scale) {
            // Near-tangent: both ends tiny with equal signs; look closer.
            scan_interval(q, t_prev, t, step / 10.0, depth + 1, out);
        }
        t_prev = t;
        f_prev = f;
        prev = cur;
    }
}

inline std::vector<ZeroRecord> scan_critical_line(unsigned q, double t_max, double step) {
    std::vector<ZeroRecord> zeros;
    if (q % 2 == 1) {
        const PolyValue origin = P_q_detailed(q, {0.5, 0.0});
        zeros.push_back({q, 0.0, std::abs(origin.value), 0.0, origin.term_scale});
        // The section is odd in t; start past the origin so it is not bracketed twice.
        scan_interval(q, std::min(step, t_max), t_max, step, 0, zeros);
    } else {
        scan_interval(q, 0.0, t_max, step, 0, zeros);
    }
    std::sort(zeros.begin(), zeros.end(), [](const ZeroRecord& a, const ZeroRecord& b) { return a.t < b.t; });
    zeros.erase(std::unique(zeros.begin(), zeros.end(),
                            [](const ZeroRecord& a, const ZeroRecord& b) { return std::abs(a.t - b.t) <= kBracketWidth; }),
                zeros.end());
    return zeros;
}

} // namespace detail

/// Number of zeros a list of non-negative ordinates accounts for.
inline unsigned symmetric_zero_count(const std::vector<ZeroRecord>& zeros) {
    unsigned count = 0;
    for (const auto& z : zeros) count += z.t == 0.0 ? 1 : 2;
    return count;
}

/// All zeros of P_q on the critical line with t >= 0. Retries once at a ten
/// times finer grid, then throws CountMismatch.
inline std::vector<ZeroRecord> find_zeros(unsigned q, std::optional<double> t_max = std::nullopt,
                                          double grid_step = kDefaultZeroGridStep) {
    if (!(grid_step > 0.0)) throw DomainError("find_zeros: grid_step must be positive");
    if (q == 0) return {};
    const double range = t_max ? *t_max : default_scan_range(q);
    if (!(range > 0.0)) throw DomainError("find_zeros: t_max must be positive");
    auto zeros = detail::scan_critical_line(q, range, grid_step);
    if (symmetric_zero_count(zeros) == q) return zeros;
    zeros = detail::scan_critical_line(q, range, grid_step / 10.0);
    const unsigned found = symmetric_zero_count(zeros);
    if (found != q) {
        throw CountMismatch("find_zeros: found " + std::to_string(found) + " critical-line zeros of P_" +
                                std::to_string(q) + ", expected " + std::to_string(q),
                            found, q);
    }
    return zeros;
}

struct ExhaustiveReport {
    unsigned q = 0;
    bool passed = false;
    std::vector<ZeroRecord> zeros;
    unsigned count = 0;
    double min_gap = std::numeric_limits<double>::infinity(); ///< over the full symmetric set
    double max_residual_ratio = 0.0;                          ///< max residual / scale
    double max_mirror_ratio = 0.0;                            ///< max |P_q(1/2 - it)| / scale
    std::vector<std::string> warnings;
    std::string diagnostics;
};

/// True when the critical-line zero count equals the degree, so that no zero
/// lies off the line.
inline ExhaustiveReport verify_exhaustive(unsigned q, std::optional<double> t_max = std::nullopt,
                                          double grid_step = kDefaultZeroGridStep) {
    ExhaustiveReport report;
    report.q = q;
    if (q > kPolyValidityCeiling)
        report.warnings.push_back("PrecisionWarning: degree " + std::to_string(q) + " exceeds validated ceiling " +
                                  std::to_string(kPolyValidityCeiling));
    try {
        report.zeros = find_zeros(q, t_max, grid_step);
    } catch (const CountMismatch& e) {
        report.count = e.found();
        report.diagnostics = e.what();
        return report;
    }
    report.count = symmetric_zero_count(report.zeros);
    std::vector<double> ordinates;
    for (const auto& z : report.zeros) {
        ordinates.push_back(z.t);
        if (z.t != 0.0) ordinates.push_back(-z.t);
        report.max_residual_ratio = std::max(report.max_residual_ratio, z.residual / z.scale);
        report.max_mirror_ratio = std::max(report.max_mirror_ratio, std::abs(P_q(q, {0.5, -z.t})) / z.scale);
    }
    std::sort(ordinates.begin(), ordinates.end());
    for (std::size_t i = 1; i < ordinates.size(); ++i)
        report.min_gap = std::min(report.min_gap, ordinates[i] - ordinates[i - 1]);
    if (report.max_residual_ratio > 1e-10)
        report.warnings.push_back("PrecisionWarning: residual/scale " + detail::format_sci(report.max_residual_ratio) +
                                  " above 1e-10");
    report.passed = report.count == q;
    return report;
}

} // namespace xiforge
