#include <gtest/gtest.h>

#include <cmath>

#include "xiforge/critical_zeros.hpp"

using namespace xiforge;

TEST(Section, Examples) {
    EXPECT_EQ(critical_line_section(1, 0.0), 0.0);
    // P_2(s) = (2/3)(s^2 - s + 3/4) has its zeros at s = 1/2 +- i sqrt(2)/2.
    EXPECT_LE(std::abs(critical_line_section(2, std::sqrt(0.5))), 1e-12);
    EXPECT_LE(std::abs(critical_line_section(2, -std::sqrt(0.5))), 1e-12);
    for (unsigned q = 0; q <= 20; q += 2)
        for (double t : {0.3, 1.7, 5.2}) EXPECT_EQ(critical_line_section(q, t), critical_line_section(q, -t));
}

TEST(Section, OtherComponentVanishes) {
    for (unsigned q = 1; q <= 20; ++q) {
        for (double t : {0.4, 2.2, 7.9}) {
            const PolyValue v = P_q_detailed(q, {0.5, t});
            const double other = q % 2 == 0 ? v.value.imag() : v.value.real();
            EXPECT_LE(std::abs(other), 1e-13 * v.term_scale) << q << " " << t;
        }
    }
}

TEST(FindZeros, Examples) {
    EXPECT_TRUE(find_zeros(0).empty());
    const auto one = find_zeros(1);
    ASSERT_EQ(one.size(), 1u);
    EXPECT_EQ(one[0].t, 0.0);
    const auto two = find_zeros(2);
    ASSERT_EQ(two.size(), 1u);
    EXPECT_NEAR(two[0].t, std::sqrt(2.0) / 2.0, 1e-10);
    EXPECT_EQ(symmetric_zero_count(two), 2u);
    EXPECT_THROW(find_zeros(3, std::nullopt, 0.0), DomainError);
    EXPECT_THROW(find_zeros(3, -1.0), DomainError);
}

TEST(FindZeros, CompleteUpToTwenty) {
    for (unsigned q = 1; q <= 20; ++q) {
        const auto zeros = find_zeros(q);
        EXPECT_EQ(symmetric_zero_count(zeros), q) << q;
        for (const auto& z : zeros) {
            EXPECT_LE(z.residual, 1e-10 * z.scale) << q << " " << z.t;
            EXPECT_LE(z.bracket_width, kBracketWidth) << q;
            EXPECT_EQ(z.q, q);
        }
        // t = 0 is a zero iff q is odd.
        EXPECT_EQ(!zeros.empty() && zeros.front().t == 0.0, q % 2 == 1) << q;
    }
}

TEST(FindZeros, StrictSignChangeAcrossBrackets) {
    for (unsigned q = 2; q <= 20; ++q) {
        for (const auto& z : find_zeros(q)) {
            if (z.t == 0.0) continue;
            const double left = critical_line_section(q, z.t - 1e-6);
            const double right = critical_line_section(q, z.t + 1e-6);
            EXPECT_LT(left * right, 0.0) << q << " " << z.t;
        }
    }
}

TEST(FindZeros, ScanRangeCoversLargestZero) {
    // The largest ordinate of P_20 is about 30.8, past the minimum range of 30.
    EXPECT_GT(default_scan_range(20), 30.0);
    EXPECT_EQ(default_scan_range(2), kMinimumScanRange);
    const auto zeros = find_zeros(20);
    EXPECT_GT(zeros.back().t, 30.0);
    for (unsigned q = 1; q <= 25; ++q) EXPECT_GE(critical_ordinate_bound(q), find_zeros(q).back().t) << q;
}

TEST(FindZeros, TruncatedRangeIsReported) {
    try {
        find_zeros(20, 30.0);
        FAIL() << "expected CountMismatch";
    } catch (const CountMismatch& e) {
        EXPECT_EQ(e.found(), 18);
        EXPECT_EQ(e.expected(), 20);
    }
}

TEST(Exhaustive, Vacuous) {
    const auto report = verify_exhaustive(0);
    EXPECT_TRUE(report.passed);
    EXPECT_EQ(report.count, 0u);
    EXPECT_TRUE(report.zeros.empty());
}

TEST(Exhaustive, FifteenAndTwentyFive) {
    const auto fifteen = verify_exhaustive(15);
    EXPECT_TRUE(fifteen.passed);
    EXPECT_EQ(fifteen.count, 15u);
    EXPECT_GT(fifteen.min_gap, 1e-6);
    EXPECT_LE(fifteen.max_mirror_ratio, 1e-10);
    const auto twenty_five = verify_exhaustive(25);
    EXPECT_TRUE(twenty_five.passed);
    EXPECT_EQ(twenty_five.count, 25u);
    for (const auto& w : twenty_five.warnings) EXPECT_NE(w.find("PrecisionWarning"), std::string::npos);
}

TEST(Exhaustive, SimplicityAndMirror) {
    for (unsigned q = 1; q <= 20; ++q) {
        const auto report = verify_exhaustive(q);
        EXPECT_TRUE(report.passed) << q;
        if (q >= 2) {
            EXPECT_GT(report.min_gap, 1e-6) << q;
        }
        EXPECT_LE(report.max_mirror_ratio, 1e-10) << q;
    }
}

TEST(Exhaustive, FailureCarriesDiagnostics) {
    const auto report = verify_exhaustive(20, 30.0);
    EXPECT_FALSE(report.passed);
    EXPECT_EQ(report.count, 18u);
    EXPECT_NE(report.diagnostics.find("expected 20"), std::string::npos);
}

TEST(Exhaustive, WarnsPastCeiling) {
    const auto report = verify_exhaustive(26);
    bool warned = false;
    for (const auto& w : report.warnings) warned |= w.find("ceiling") != std::string::npos;
    EXPECT_TRUE(warned);
}
