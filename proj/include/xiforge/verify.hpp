#pragma once

// Verification suites: each checks one identity over a grid of cases and
// returns a per-case pass/fail table. The command-line tool and the
// acceptance runner share these.

#include <algorithm>
#include <cmath>
#include <complex>
#include <cstdint>
#include <cstdio>
#include <functional>
#include <numbers>
#include <optional>
#include <random>
#include <string>
#include <vector>

#include "xiforge/critical_zeros.hpp"
#include "xiforge/hyper_poly.hpp"
#include "xiforge/theta_series.hpp"
#include "xiforge/xi_repr.hpp"
#include "xiforge/zeta_engine.hpp"

namespace xiforge {

struct CaseResult {
    std::string key;
    bool passed = false;
    double deviation = 0.0;
    double tolerance = 0.0;
    std::string detail;
};

struct SuiteResult {
    std::string suite;
    std::vector<CaseResult> cases;
    std::vector<std::string> notes;

    bool passed() const {
        return !cases.empty() && std::all_of(cases.begin(), cases.end(), [](const CaseResult& c) { return c.passed; });
    }
    double max_deviation() const {
        double worst = 0.0;
        for (const auto& c : cases) worst = std::max(worst, std::isnan(c.deviation) ? INFINITY : c.deviation);
        return worst;
    }
};

/// Parameters shared by the suites; each suite reads the fields it needs.
struct VerifyOptions {
    std::optional<unsigned> qmax; ///< suite default when unset
    std::optional<unsigned> jmax; ///< suite default when unset
    std::optional<unsigned> j;
    std::optional<ComplexValue> s;
    std::vector<double> b_list;
    unsigned samples = 200;
    std::uint64_t seed = 20240601;
    QuadratureConfig qc;
    SeriesControl ctl;
};

namespace detail {

inline std::string format_g(double x, int digits = 6) {
    char buffer[48];
    std::snprintf(buffer, sizeof buffer, "%.*g", digits, x);
    return buffer;
}

inline std::string format_complex(ComplexValue z) {
    if (z.imag() == 0.0) return format_g(z.real());
    return format_g(z.real()) + (z.imag() < 0 ? "" : "+") + format_g(z.imag()) + "i";
}

inline std::string pad(unsigned n, int width = 2) {
    char buffer[16];
    std::snprintf(buffer, sizeof buffer, "%0*u", width, n);
    return buffer;
}

inline CaseResult make_case(std::string key, double deviation, double tolerance, std::string detail = {}) {
    return {std::move(key), deviation <= tolerance, deviation, tolerance, std::move(detail)};
}

// Runs a case body; library errors become a failed case carrying the message.
inline CaseResult guarded(const std::string& key, double tolerance, const std::function<CaseResult()>& body) {
    try {
        return body();
    } catch (const Error& e) {
        return {key, false, NAN, tolerance, e.what()};
    }
}

inline void sort_cases(SuiteResult& result) {
    std::stable_sort(result.cases.begin(), result.cases.end(),
                     [](const CaseResult& a, const CaseResult& b) { return a.key < b.key; });
}

// Uniform points in the disk |s| <= radius.
inline std::vector<ComplexValue> random_disk(unsigned count, double radius, std::uint64_t seed) {
    std::mt19937_64 engine(seed);
    std::uniform_real_distribution<double> unit(0.0, 1.0);
    std::vector<ComplexValue> points;
    points.reserve(count);
    for (unsigned i = 0; i < count; ++i) {
        const double r = radius * std::sqrt(unit(engine));
        const double angle = 2.0 * std::numbers::pi * unit(engine);
        points.push_back(std::polar(r, angle));
    }
    return points;
}

inline std::vector<unsigned> j_range(const VerifyOptions& opt, unsigned default_jmax) {
    if (opt.j) return {*opt.j};
    std::vector<unsigned> js;
    for (unsigned j = 0; j <= opt.jmax.value_or(default_jmax); ++j) js.push_back(j);
    return js;
}

} // namespace detail

/// P_q(s) = (-1)^q P_q(1 - s) at random |s| <= 15, relative to max(1, |P_q(s)|).
inline SuiteResult verify_functional_equation(const VerifyOptions& opt = {}) {
    SuiteResult result{"functional-eq", {}, {}};
    const auto points = detail::random_disk(opt.samples, 15.0, opt.seed);
    for (unsigned q = 0; q <= opt.qmax.value_or(20); ++q) {
        const std::string key = "q=" + detail::pad(q);
        result.cases.push_back(detail::guarded(key, 1e-9, [&] {
            double worst = 0.0;
            const double sign = q % 2 == 0 ? 1.0 : -1.0;
            for (const auto& s : points) {
                const ComplexValue value = P_q(q, s);
                worst = std::max(worst, std::abs(value - sign * P_q(q, 1.0 - s)) / std::max(1.0, std::abs(value)));
            }
            return detail::make_case(key, worst, 1e-9, std::to_string(points.size()) + " points");
        }));
    }
    return result;
}

/// Hypergeometric form of P_q against the direct Pochhammer sum H_q + (-1)^q / q!.
inline SuiteResult verify_hypergeometric_vs_direct(const VerifyOptions& opt = {}) {
    SuiteResult result{"hyp-vs-direct", {}, {}};
    const auto points = detail::random_disk(std::min(opt.samples, 100u), 15.0, opt.seed + 1);
    for (unsigned q = 0; q <= opt.qmax.value_or(15); ++q) {
        const std::string key = "q=" + detail::pad(q);
        result.cases.push_back(detail::guarded(key, 1e-10, [&] {
            const double constant = (q % 2 == 0 ? 1.0 : -1.0) / to_double(RationalValue(factorial(q)));
            double worst = 0.0;
            for (const auto& s : points) {
                const ComplexValue hyp = P_q(q, s);
                const ComplexValue direct = H_q_direct(q, s) + constant;
                worst = std::max(worst, std::abs(hyp - direct) / std::max(std::abs(hyp), std::abs(direct)));
            }
            return detail::make_case(key, worst, 1e-10, std::to_string(points.size()) + " points");
        }));
    }
    return result;
}

/// The 40-point grid of the theta inversion check: 20 real points spread
/// geometrically over [0.05, 20] and 20 points on the unit circle inside the wedge.
inline std::vector<ComplexValue> lemma1_grid() {
    std::vector<ComplexValue> grid;
    for (int k = 0; k < 20; ++k) grid.emplace_back(0.05 * std::pow(400.0, k / 19.0), 0.0);
    const double half_width = std::numbers::pi / 2 - 0.1;
    for (int k = 0; k < 20; ++k) grid.push_back(std::polar(1.0, -half_width + (k + 0.5) * (2.0 * half_width) / 20.0));
    return grid;
}

/// psi_j(x) against its inversion x -> 1/x.
inline SuiteResult verify_lemma1(const VerifyOptions& opt = {}) {
    SuiteResult result{"lemma1", {}, {}};
    const auto grid = lemma1_grid();
    for (unsigned j : detail::j_range(opt, 5)) {
        const std::string key = "j=" + std::to_string(j);
        result.cases.push_back(detail::guarded(key, 1e-12, [&] {
            double worst = 0.0;
            ComplexValue worst_x;
            for (const auto& x : grid) {
                const double r = lemma1_residual(j, x, opt.ctl);
                if (r > worst) {
                    worst = r;
                    worst_x = x;
                }
            }
            return detail::make_case(key, worst, 1e-12, "worst at x=" + detail::format_complex(worst_x));
        }));
    }
    return result;
}

/// Mellin transforms of psi_j and omega_{2q,l} against their closed forms.
/// The omega case at l = 2 is recorded like the others; it tests the
/// shifted-argument form zeta(s - l) P_q(s).
inline SuiteResult verify_mellin(const VerifyOptions& opt = {}) {
    SuiteResult result{"mellin", {}, {}};
    const std::vector<ComplexValue> s_list =
        opt.s ? std::vector<ComplexValue>{*opt.s} : std::vector<ComplexValue>{2.0, 2.5, 4.0, {3.0, 2.0}};
    constexpr double tol = 1e-8;
    for (unsigned j : detail::j_range(opt, 3)) {
        for (const auto& s : s_list) {
            const std::string key = "psi j=" + std::to_string(j) + " s=" + detail::format_complex(s);
            result.cases.push_back(detail::guarded(key, tol, [&] {
                const auto integral = mellin_psi_integral(j, s, opt.qc, opt.ctl);
                const ComplexValue target = p_j(j, s) * completed_zeta(s);
                const double dev = std::abs(integral.value - target);
                return detail::make_case(key, dev, tol * (1.0 + std::abs(target)),
                                         "err_estimate=" + detail::format_g(integral.err_estimate, 3));
            }));
        }
    }
    struct OmegaCase {
        unsigned q, ell;
        ComplexValue s;
    };
    for (const OmegaCase& c : {OmegaCase{0, 0, 2.0}, OmegaCase{1, 0, 3.0}, OmegaCase{1, 2, 5.0},
                               OmegaCase{2, 2, {6.0, 1.0}}}) {
        const std::string key = "omega q=" + std::to_string(c.q) + " l=" + std::to_string(c.ell) +
                                " s=" + detail::format_complex(c.s);
        result.cases.push_back(detail::guarded(key, tol, [&] {
            const auto integral = mellin_omega_integral(c.q, c.ell, c.s, opt.qc, opt.ctl);
            const ComplexValue gamma_factor = std::exp(-0.5 * c.s * std::log(std::numbers::pi)) * gamma_complex(c.s / 2.0);
            const ComplexValue target = gamma_factor * zeta_family(c.q, c.ell, c.s);
            const double dev = std::abs(integral.value - target);
            return detail::make_case(key, dev, tol * (1.0 + std::abs(target)),
                                     "err_estimate=" + detail::format_g(integral.err_estimate, 3));
        }));
    }
    detail::sort_cases(result);
    return result;
}

namespace detail {

// |a - b| measured both raw and relative to |p_j(s) 2 / (s (s - 1))|; the larger counts.
inline double split_deviation(unsigned j, ComplexValue s, ComplexValue a, ComplexValue b) {
    const double raw = std::abs(a - b);
    const double scale = std::abs(p_j(j, s) * 2.0 / (s * (s - 1.0)));
    return std::max(raw, scale > 0.0 ? raw / scale : raw);
}

} // namespace detail

/// b-independence of the real-b split representation and agreement with xi_direct.
inline SuiteResult verify_prop3(const VerifyOptions& opt = {}) {
    SuiteResult result{"prop3", {}, {}};
    const std::vector<ComplexValue> s_list =
        opt.s ? std::vector<ComplexValue>{*opt.s} : std::vector<ComplexValue>{2.0, 3.0, {0.5, 5.0}};
    const std::vector<double> b_list = opt.b_list.empty() ? std::vector<double>{0.3, 1.0, 3.0} : opt.b_list;
    constexpr double tol = 1e-8;
    for (unsigned j : detail::j_range(opt, 3)) {
        for (const auto& s : s_list) {
            const std::string base = "j=" + std::to_string(j) + " s=" + detail::format_complex(s);
            std::vector<std::pair<double, ComplexValue>> values;
            for (double b : b_list) {
                const std::string key = base + " b=" + detail::format_g(b) + " vs xi";
                result.cases.push_back(detail::guarded(key, tol, [&] {
                    const auto r = xi_prop3(j, s, b, opt.qc, opt.ctl);
                    values.emplace_back(b, r.value);
                    return detail::make_case(key, detail::split_deviation(j, s, r.value, split_target(j, s)), tol,
                                             "err_estimate=" + detail::format_g(r.err_estimate, 3));
                }));
            }
            for (std::size_t a = 0; a < values.size(); ++a) {
                for (std::size_t c = a + 1; c < values.size(); ++c) {
                    const std::string key = base + " b=" + detail::format_g(values[a].first) + "|" +
                                            detail::format_g(values[c].first);
                    result.cases.push_back(detail::make_case(
                        key, detail::split_deviation(j, s, values[a].second, values[c].second), tol));
                }
            }
        }
    }
    detail::sort_cases(result);
    return result;
}

/// Wedge forms (i) and (ii) on the unit circle against each other, xi_direct,
/// and the real-b value.
inline SuiteResult verify_prop4(const VerifyOptions& opt = {}) {
    SuiteResult result{"prop4", {}, {}};
    const std::vector<ComplexValue> s_list =
        opt.s ? std::vector<ComplexValue>{*opt.s} : std::vector<ComplexValue>{2.0, {2.0, 1.0}};
    const double pi = std::numbers::pi;
    const std::vector<double> angles = {-pi / 3, -pi / 6, 0.0, pi / 6, pi / 3};
    constexpr double tol = 1e-8;
    for (unsigned j : detail::j_range(opt, 3)) {
        for (const auto& s : s_list) {
            std::optional<ComplexValue> real_b;
            try {
                real_b = xi_prop3(j, s, 1.0, opt.qc, opt.ctl).value;
            } catch (const Error&) {
            }
            for (double theta : angles) {
                const ComplexValue b = std::polar(1.0, theta);
                const std::string base = "j=" + std::to_string(j) + " s=" + detail::format_complex(s) +
                                         " theta=" + detail::format_g(theta / pi * 6.0) + "pi/6";
                std::optional<ComplexValue> form_i, form_ii;
                result.cases.push_back(detail::guarded(base + " (i) vs xi", tol, [&] {
                    const auto r = xi_prop4(j, s, b, Prop4Form::Inversion, opt.qc, opt.ctl);
                    form_i = r.value;
                    return detail::make_case(base + " (i) vs xi",
                                             detail::split_deviation(j, s, r.value, split_target(j, s)), tol,
                                             "err_estimate=" + detail::format_g(r.err_estimate, 3));
                }));
                result.cases.push_back(detail::guarded(base + " (ii) vs xi", tol, [&] {
                    const auto r = xi_prop4(j, s, b, Prop4Form::Conjugate, opt.qc, opt.ctl);
                    form_ii = r.value;
                    return detail::make_case(base + " (ii) vs xi",
                                             detail::split_deviation(j, s, r.value, split_target(j, s)), tol,
                                             "err_estimate=" + detail::format_g(r.err_estimate, 3));
                }));
                if (form_i && form_ii)
                    result.cases.push_back(detail::make_case(base + " (i) vs (ii)",
                                                             detail::split_deviation(j, s, *form_i, *form_ii), tol));
                if (form_i && real_b)
                    result.cases.push_back(detail::make_case(base + " (i) vs b=1",
                                                             detail::split_deviation(j, s, *form_i, *real_b), tol));
            }
        }
    }
    detail::sort_cases(result);
    return result;
}

/// Exact-rational special values at even positive and non-positive integers
/// against the floating evaluation of the family.
inline SuiteResult verify_special_values(const VerifyOptions& opt = {}) {
    SuiteResult result{"special-values", {}, {}};
    constexpr double tol = 1e-12;
    const double pi = std::numbers::pi;
    struct Anchor {
        std::string key;
        double exact_pipeline;
        double closed_form;
        ComplexValue s;
    };
    const std::vector<Anchor> anchors = {
        {"anchor zeta(2)=pi^2/6", special_value_even(0, 1).value(), pi * pi / 6, 2.0},
        {"anchor zeta(4)=pi^4/90", special_value_even(0, 2).value(), std::pow(pi, 4) / 90, 4.0},
        {"anchor zeta(-1)=-1/12", special_value_neg(0, 1).value(), -1.0 / 12, -1.0},
        {"anchor zeta(0)=-1/2", special_value_neg(0, 0).value(), -0.5, 0.0},
        {"anchor zeta(-2)=0", special_value_neg(0, 2).value(), 0.0, -2.0},
        {"anchor zeta(-4)=0", special_value_neg(0, 4).value(), 0.0, -4.0},
        {"anchor zeta(-6)=0", special_value_neg(0, 6).value(), 0.0, -6.0},
    };
    for (const auto& a : anchors) {
        result.cases.push_back(detail::guarded(a.key, tol, [&] {
            const double floating = std::abs(zeta_family(0, 0, a.s) - a.exact_pipeline);
            const double closed = std::abs(a.closed_form - a.exact_pipeline);
            return detail::make_case(a.key, std::max(floating, closed), tol * std::max(1.0, std::abs(a.closed_form)));
        }));
    }
    for (unsigned q = 0; q <= opt.qmax.value_or(6); ++q) {
        for (unsigned m = 1; m <= 4; ++m) {
            const std::string key = "even q=" + std::to_string(q) + " s=" + std::to_string(2 * m);
            result.cases.push_back(detail::guarded(key, tol, [&] {
                const double exact = special_value_even(q, m).value();
                const double floating = zeta_family(q, 0, 2.0 * m).real();
                return detail::make_case(key, std::abs(exact - floating) / std::max(1.0, std::abs(exact)), tol);
            }));
        }
        for (unsigned n = 0; n <= 7; ++n) {
            const std::string key = "neg q=" + std::to_string(q) + " s=-" + std::to_string(n);
            result.cases.push_back(detail::guarded(key, tol, [&] {
                const double exact = special_value_neg(q, n).value();
                const double floating = zeta_family(q, 0, -static_cast<double>(n)).real();
                return detail::make_case(key, std::abs(exact - floating) / std::max(1.0, std::abs(exact)), tol);
            }));
        }
    }
    detail::sort_cases(result);
    return result;
}

/// psi_j directly against the odd/even recombination around x = i.
inline SuiteResult verify_eq24(const VerifyOptions& opt = {}) {
    SuiteResult result{"eq24", {}, {}};
    constexpr double tol = 1e-10;
    for (unsigned j : detail::j_range(opt, 2)) {
        for (const ComplexValue x : {ComplexValue(1.0), ComplexValue(0.3, 0.8)}) {
            const std::string key = "j=" + std::to_string(j) + " x=" + detail::format_complex(x);
            result.cases.push_back(detail::guarded(key, tol, [&] {
                const auto [direct, recombined] = near_i_decomposition(j, x, opt.ctl);
                return detail::make_case(key, std::abs(direct - recombined), tol);
            }));
        }
    }
    return result;
}

/// The two closed forms of d/ds 2F1(-q, s/2; 1/2; 2) at s = 0 against each
/// other (exactly) and against the s -> 0 limit of the general derivative.
inline SuiteResult verify_eq14(const VerifyOptions& opt = {}) {
    SuiteResult result{"eq14", {}, {}};
    for (unsigned q = 1; q <= opt.qmax.value_or(15); ++q) {
        const auto forms = deriv_2F1_at_zero_forms(q);
        const double half_sum = to_double(forms.half_sum);
        const double three_f_two = to_double(forms.three_f_two);
        const double scale = std::max(1.0, std::abs(half_sum));
        const std::string qk = "q=" + detail::pad(q);
        result.cases.push_back(detail::make_case(qk + " half-sum vs 3F2", std::abs(half_sum - three_f_two) / scale,
                                                 1e-12, forms.half_sum == forms.three_f_two ? "exact" : "inexact"));
        result.cases.push_back(detail::guarded(qk + " vs rational limit", 1e-10, [&] {
            const double limit = d2F1_ds(q, 0.0, DerivativeForm::Rational).real();
            return detail::make_case(qk + " vs rational limit", std::abs(limit - half_sum) / scale, 1e-10);
        }));
        result.cases.push_back(detail::guarded(qk + " vs digamma limit", 1e-10, [&] {
            // Symmetric averages about s = 0 cancel odd orders; Richardson removes h^2.
            const auto average = [q](double h) {
                return 0.5 * (d2F1_ds(q, h, DerivativeForm::Digamma).real() +
                              d2F1_ds(q, -h, DerivativeForm::Digamma).real());
            };
            const double h = 1e-3;
            const double limit = (4.0 * average(h / 2) - average(h)) / 3.0;
            return detail::make_case(qk + " vs digamma limit", std::abs(limit - half_sum) / scale, 1e-10);
        }));
    }
    detail::sort_cases(result);
    return result;
}

/// Which sign of s/2 in 2F1(-q, +-s/2; 1/2; 2) makes c_q 2F1 zeta(s) equal the
/// Mellin transform of omega_{2q,0}? The quadrature decides, at q = 1, 2.
inline SuiteResult verify_hyp_sign(const VerifyOptions& opt = {}) {
    SuiteResult result{"hyp-sign", {}, {}};
    constexpr double tol = 1e-8;
    const std::vector<ComplexValue> s_list = {3.0, 4.5, {2.5, 1.0}};
    int plus_passes = 0;
    int minus_passes = 0;
    int total = 0;
    for (unsigned q = 1; q <= 2; ++q) {
        for (const auto& s : s_list) {
            const std::string base = "q=" + std::to_string(q) + " s=" + detail::format_complex(s);
            std::optional<ComplexValue> oracle;
            try {
                const ComplexValue gamma_factor = std::exp(-0.5 * s * std::log(std::numbers::pi)) * gamma_complex(s / 2.0);
                oracle = mellin_omega_integral(q, 0, s, opt.qc, opt.ctl).value / gamma_factor;
            } catch (const Error& e) {
                result.cases.push_back({base + " quadrature", false, NAN, tol, e.what()});
                continue;
            }
            ++total;
            const double plus_dev = std::abs(zeta_family_hyp_form(q, s, HypArgSign::Plus) - *oracle) /
                                    std::max(1.0, std::abs(*oracle));
            const double minus_dev = std::abs(zeta_family_hyp_form(q, s, HypArgSign::Minus) - *oracle) /
                                     std::max(1.0, std::abs(*oracle));
            plus_passes += plus_dev <= tol;
            minus_passes += minus_dev <= tol;
            result.notes.push_back(base + ": +s/2 deviation " + detail::format_g(plus_dev, 3) + ", -s/2 deviation " +
                                   detail::format_g(minus_dev, 3));
        }
    }
    const bool plus_only = plus_passes == total && minus_passes == 0;
    const bool minus_only = minus_passes == total && plus_passes == 0;
    const std::string verdict = plus_only ? "+s/2" : minus_only ? "-s/2" : "undecided";
    result.cases.push_back({"exactly one convention passes", total > 0 && (plus_only || minus_only),
                            static_cast<double>(total - std::max(plus_passes, minus_passes)), 0.0,
                            "+s/2 passes " + std::to_string(plus_passes) + "/" + std::to_string(total) +
                                ", -s/2 passes " + std::to_string(minus_passes) + "/" + std::to_string(total)});
    result.notes.push_back("adjudicated convention: " + verdict);
    return result;
}

/// Critical-line zero counts of P_q for 1 <= q <= qmax.
inline SuiteResult verify_zero_counts(const VerifyOptions& opt = {}) {
    SuiteResult result{"zeros", {}, {}};
    for (unsigned q = 1; q <= opt.qmax.value_or(20); ++q) {
        const std::string key = "q=" + detail::pad(q);
        const auto report = verify_exhaustive(q);
        CaseResult c{key, report.passed && report.max_residual_ratio <= 1e-10, report.max_residual_ratio, 1e-10,
                     "count " + std::to_string(report.count) + "/" + std::to_string(q) + ", min gap " +
                         detail::format_g(report.min_gap, 4)};
        if (!report.diagnostics.empty()) c.detail += "; " + report.diagnostics;
        result.cases.push_back(std::move(c));
    }
    return result;
}

/// Signature of a suite entry point.
using SuiteFunction = SuiteResult (*)(const VerifyOptions&);

struct SuiteEntry {
    const char* name;
    SuiteFunction run;
};

/// Suites reachable by name from the command line.
inline const std::vector<SuiteEntry>& suite_registry() {
    static const std::vector<SuiteEntry> registry = {
        {"functional-eq", &verify_functional_equation},
        {"lemma1", &verify_lemma1},
        {"mellin", &verify_mellin},
        {"prop3", &verify_prop3},
        {"prop4", &verify_prop4},
        {"special-values", &verify_special_values},
        {"eq24", &verify_eq24},
        {"eq14", &verify_eq14},
        {"hyp-sign", &verify_hyp_sign},
    };
    return registry;
}

} // namespace xiforge
