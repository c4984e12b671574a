#include <gtest/gtest.h>

#include <cmath>
#include <numbers>

#include "xiforge/quadrature.hpp"

using namespace xiforge;

TEST(QuadratureConfig, DefaultsAndValidation) {
    const QuadratureConfig qc;
    EXPECT_EQ(qc.abs_tol(), 1e-11);
    EXPECT_EQ(qc.rel_tol(), 1e-10);
    EXPECT_EQ(qc.max_subdivisions(), 2000);
    EXPECT_EQ(qc.ray_cutoff(), 12.0);
    EXPECT_THROW(QuadratureConfig(0.0, 1e-10, 10, 12.0), DomainError);
    EXPECT_THROW(QuadratureConfig(1e-10, -1.0, 10, 12.0), DomainError);
    EXPECT_THROW(QuadratureConfig(1e-10, 1e-10, 0, 12.0), DomainError);
    EXPECT_THROW(QuadratureConfig(1e-10, 1e-10, 10, 1.5), DomainError);
}

TEST(Quadrature, PolynomialsExact) {
    const auto result = integrate_adaptive([](double x) { return ComplexValue(x * x * x, 2.0 * x); }, 0.0, 2.0, {});
    EXPECT_NEAR(result.value.real(), 4.0, 1e-14);
    EXPECT_NEAR(result.value.imag(), 4.0, 1e-14);
    EXPECT_EQ(result.subdivisions_used, 0);
}

TEST(Quadrature, OscillatoryComplexIntegrand) {
    // int_0^{2 pi} e^{i 20 x} x dx = 2 pi / (20 i) = -i pi / 10.
    const auto f = [](double x) { return x * std::exp(ComplexValue(0.0, 20.0 * x)); };
    const auto result = integrate_adaptive(f, 0.0, 2.0 * std::numbers::pi, {}, 4);
    EXPECT_LE(std::abs(result.value - ComplexValue(0.0, -std::numbers::pi / 10.0)), 1e-10);
    EXPECT_GE(result.err_estimate, 0.0);
    EXPECT_LE(result.err_estimate, QuadratureConfig().target(std::abs(result.value)));
}

TEST(Quadrature, ReportsAchievedEstimateWhenBudgetRunsOut) {
    const QuadratureConfig tight(1e-15, 1e-15, 2, 12.0);
    try {
        integrate_adaptive([](double x) { return ComplexValue(std::sqrt(x)); }, 0.0, 1.0, tight);
        FAIL() << "expected ToleranceNotMet";
    } catch (const ToleranceNotMet& e) {
        EXPECT_GT(e.achieved_estimate(), 1e-15);
    }
}

TEST(Quadrature, NonFiniteIntegrand) {
    EXPECT_THROW(integrate_adaptive([](double) { return ComplexValue(INFINITY); }, 0.0, 1.0, {}), OverflowError);
}
