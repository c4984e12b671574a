#pragma once

// Adaptive Gauss-Kronrod (7/15) quadrature for complex-valued integrands on
// a finite real interval. Panels are bisected worst-first until the summed
// |K15 - G7| estimate meets max(abs_tol, rel_tol |value|).

#include <algorithm>
#include <array>
#include <cmath>
#include <complex>
#include <queue>
#include <string>
#include <vector>

#include "xiforge/detail/complex_math.hpp"
#include "xiforge/error.hpp"

namespace xiforge {

class QuadratureConfig {
public:
    QuadratureConfig() = default;
    QuadratureConfig(double abs_tol, double rel_tol, int max_subdivisions, double ray_cutoff)
        : abs_tol_(abs_tol), rel_tol_(rel_tol), max_subdivisions_(max_subdivisions), ray_cutoff_(ray_cutoff) {
        if (!(abs_tol > 0.0) || !(rel_tol > 0.0)) throw DomainError("QuadratureConfig: tolerances must be positive");
        if (max_subdivisions < 1) throw DomainError("QuadratureConfig: max_subdivisions must be positive");
        if (!(ray_cutoff >= 2.0)) throw DomainError("QuadratureConfig: ray_cutoff must be at least 2");
    }

    double abs_tol() const noexcept { return abs_tol_; }
    double rel_tol() const noexcept { return rel_tol_; }
    int max_subdivisions() const noexcept { return max_subdivisions_; }
    double ray_cutoff() const noexcept { return ray_cutoff_; }

    double target(double magnitude) const { return std::max(abs_tol_, rel_tol_ * magnitude); }

private:
    double abs_tol_ = 1e-11;
    double rel_tol_ = 1e-10;
    int max_subdivisions_ = 2000;
    double ray_cutoff_ = 12.0;
};

struct QuadratureResult {
    ComplexValue value;
    double err_estimate = 0.0;
    int subdivisions_used = 0;

    QuadratureResult& operator+=(const QuadratureResult& other) {
        value += other.value;
        err_estimate += other.err_estimate;
        subdivisions_used += other.subdivisions_used;
        return *this;
    }
};

namespace detail {

inline constexpr std::array<double, 8> kKronrodNodes = {
    0.991455371120812639206854697526329, 0.949107912342758524526189684047851, 0.864864423359769072789712788640926,
    0.741531185599394439863864773280788, 0.586087235467691130294144845693013, 0.405845151377397166906606412076961,
    0.207784955007898467600689403773245, 0.000000000000000000000000000000000};

inline constexpr std::array<double, 8> kKronrodWeights = {
    0.022935322010529224963732008058970, 0.063092092629978553290700663189204, 0.104790010322250183839876322541518,
    0.140653259715525918745189590510238, 0.169004726639267902826583426598550, 0.190350578064785409913256402421014,
    0.204432940075298892414161999234649, 0.209482141084727828012999174891714};

// Gauss weights for the odd-indexed Kronrod nodes (1, 3, 5) and the centre.
inline constexpr std::array<double, 4> kGaussWeights = {
    0.129484966168869693270611432679082, 0.279705391489276667901467771423780, 0.381830050505118944950369775488975,
    0.417959183673469387755102040816327};

struct Panel {
    double a;
    double b;
    ComplexValue value;
    double error;

    bool operator<(const Panel& other) const { return error < other.error; }
};

template <class F>
Panel gauss_kronrod_15(F& f, double a, double b) {
    const double centre = 0.5 * (a + b);
    const double half = 0.5 * (b - a);
    const ComplexValue fc = f(centre);
    ComplexValue kronrod = kKronrodWeights[7] * fc;
    ComplexValue gauss = kGaussWeights[3] * fc;
    for (int i = 0; i < 7; ++i) {
        const double dx = half * kKronrodNodes[i];
        const ComplexValue pair = f(centre - dx) + f(centre + dx);
        kronrod += kKronrodWeights[i] * pair;
        if (i % 2 == 1) gauss += kGaussWeights[i / 2] * pair;
    }
    kronrod *= half;
    gauss *= half;
    return {a, b, kronrod, std::abs(kronrod - gauss)};
}

} // namespace detail

/// Integrate f over [a, b], starting from `initial_panels` equal panels.
/// Throws ToleranceNotMet (carrying the achieved estimate) when the
/// subdivision budget runs out first.
template <class F>
QuadratureResult integrate_adaptive(F&& f, double a, double b, const QuadratureConfig& config,
                                    int initial_panels = 1) {
    initial_panels = std::max(1, initial_panels);
    std::priority_queue<detail::Panel> panels;
    ComplexValue total = 0.0;
    double error = 0.0;
    const double width = (b - a) / initial_panels;
    for (int i = 0; i < initial_panels; ++i) {
        const double lo = a + i * width;
        const double hi = i + 1 == initial_panels ? b : lo + width;
        auto panel = detail::gauss_kronrod_15(f, lo, hi);
        total += panel.value;
        error += panel.error;
        panels.push(panel);
    }

    int subdivisions = 0;
    while (error > config.target(std::abs(total))) {
        if (subdivisions >= config.max_subdivisions()) {
            throw ToleranceNotMet("integrate_adaptive: error estimate " + detail::format_sci(error) +
                                      " above target after " + std::to_string(subdivisions) + " subdivisions",
                                  error);
        }
        const detail::Panel worst = panels.top();
        panels.pop();
        const double mid = 0.5 * (worst.a + worst.b);
        auto left = detail::gauss_kronrod_15(f, worst.a, mid);
        auto right = detail::gauss_kronrod_15(f, mid, worst.b);
        total += left.value + right.value - worst.value;
        error += left.error + right.error - worst.error;
        panels.push(left);
        panels.push(right);
        ++subdivisions;
    }

    // Re-sum to shed drift from the incremental updates.
    total = 0.0;
    error = 0.0;
    while (!panels.empty()) {
        total += panels.top().value;
        error += panels.top().error;
        panels.pop();
    }
    if (!detail::is_finite(total)) throw OverflowError("integrate_adaptive: non-finite integral");
    return {total, error, subdivisions};
}

} // namespace xiforge
