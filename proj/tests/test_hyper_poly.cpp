#include <gtest/gtest.h>

#include <cmath>
#include <numbers>
#include <random>

#include "oracles/oracles.hpp"
#include "xiforge/hyper_poly.hpp"

using namespace xiforge;

namespace {

std::vector<ComplexValue> random_points(unsigned count, double radius, unsigned seed) {
    std::mt19937_64 rng(seed);
    std::uniform_real_distribution<double> u(-1.0, 1.0);
    std::vector<ComplexValue> out;
    while (out.size() < count) {
        const ComplexValue z{u(rng), u(rng)};
        if (std::abs(z) <= 1.0) out.push_back(radius * z);
    }
    return out;
}

double rel(ComplexValue got, ComplexValue want) {
    return std::abs(got - want) / std::max(1.0, std::abs(want));
}

} // namespace

TEST(Hyp2F1, ClosedForms) {
    for (const auto& s : random_points(20, 5.0, 1)) {
        EXPECT_EQ(hyp2f1_terminating(0, s / 2.0, 0.5, 2.0), ComplexValue(1.0));
        EXPECT_LE(rel(hyp2f1_terminating(1, s / 2.0, 0.5, 2.0), 1.0 - 2.0 * s), 1e-14);
        const ComplexValue quadratic = 4.0 / 3.0 * s * s - 4.0 / 3.0 * s + 1.0;
        EXPECT_LE(rel(hyp2f1_terminating(2, s / 2.0, 0.5, 2.0), quadratic), 1e-14);
    }
}

TEST(Hyp2F1, MatchesExactRationalSum) {
    using oracle::Rational;
    for (unsigned q = 0; q <= 20; ++q) {
        for (const Rational& b : {Rational(3, 4), Rational(-5, 2), Rational(7, 3)}) {
            for (const Rational& c : {Rational(1, 2), Rational(5, 3)}) {
                // The sum cancels heavily at z = 2, so the error is measured
                // against the size of its largest terms rather than the result.
                const double db = oracle::to_double(b), dc = oracle::to_double(c);
                const Rational eb = oracle::exact(db), ec = oracle::exact(dc);
                const double exact = oracle::to_double(oracle::hyp2f1(q, eb, ec, 2));
                const double scale = oracle::to_double(oracle::hyp2f1_term_magnitude(q, eb, ec, 2));
                const ComplexValue got = hyp2f1_terminating(q, db, dc, 2.0);
                EXPECT_LE(std::abs(got.real() - exact), 1e-14 * scale) << q;
                if (scale < 1e3 * std::abs(exact)) {
                    EXPECT_LE(std::abs(got.real() - exact), 1e-12 * std::abs(exact)) << q;
                }
            }
        }
    }
}

TEST(Hyp2F1, VanishingDenominator) {
    EXPECT_THROW(hyp2f1_terminating(3, 1.0, -1.0, 2.0), DomainError);
    EXPECT_NO_THROW(hyp2f1_terminating(1, 1.0, -1.0, 2.0));
}

TEST(PolyFamilySpec, Validation) {
    EXPECT_NO_THROW(PolyFamilySpec(3));
    EXPECT_NO_THROW(PolyFamilySpec(3, 0.5));
    EXPECT_THROW(PolyFamilySpec(3, -1.0), DomainError);
}

TEST(Pq, LowDegrees) {
    for (const auto& s : random_points(20, 8.0, 2)) {
        EXPECT_EQ(P_q(0, s), ComplexValue(1.0));
        EXPECT_LE(rel(P_q(1, s), 2.0 * s - 1.0), 1e-14);
        // P_2 = (1/2) 2F1(-2, s/2; 1/2; 2)
        EXPECT_LE(rel(P_q(2, s), 0.5 * (4.0 / 3.0 * s * s - 4.0 / 3.0 * s + 1.0)), 1e-14);
    }
    EXPECT_NEAR(P_q(2, 3.0).real(), 4.5, 1e-14);
}

TEST(Pq, VanishesAtHalfForOddDegree) {
    for (unsigned q = 1; q <= 15; q += 2) {
        const PolyValue v = P_q_detailed(q, 0.5);
        EXPECT_LE(std::abs(v.value), 1e-14 * v.term_scale) << q;
    }
}

TEST(Pq, FunctionalEquation) {
    const auto points = random_points(200, 20.0, 3);
    for (unsigned q = 0; q <= 25; ++q) {
        const double sign = q % 2 == 0 ? 1.0 : -1.0;
        for (const auto& s : points) {
            const ComplexValue a = P_q(q, s);
            EXPECT_LE(std::abs(a - sign * P_q(q, 1.0 - s)), 1e-9 * std::max(1.0, std::abs(a))) << q << " " << s;
        }
    }
}

TEST(Pq, MatchesExactCoefficients) {
    // Horner on the exact monomial coefficients at rational s.
    using oracle::Rational;
    for (unsigned q = 0; q <= 15; ++q) {
        const auto coefficients = P_q_coefficients(q);
        for (const Rational& s : {Rational(3, 2), Rational(-7, 4), Rational(5)}) {
            Rational value = 0;
            for (unsigned k = q + 1; k-- > 0;) value = value * s + coefficients[k];
            // Independent hypergeometric route with the same normalisation.
            Rational oracle_value = oracle::hyp2f1(q, s / 2, Rational(1, 2), 2) / Rational(factorial(q));
            if (q % 2 == 1) oracle_value = -oracle_value;
            EXPECT_EQ(value, oracle_value) << q;
            const double got = P_q(q, oracle::to_double(s)).real();
            EXPECT_LE(std::abs(got - oracle::to_double(value)), 1e-11 * std::max(1.0, std::abs(got))) << q;
        }
    }
}

TEST(Pq, LeadingCoefficient) {
    for (unsigned q = 1; q <= 25; ++q) {
        const auto coefficients = P_q_coefficients(q);
        ASSERT_NE(coefficients[q], 0) << q;
        const double leading = to_double(coefficients[q]);
        const double s = 1e4;
        const double ratio = P_q(q, s).real() / std::pow(s, q);
        EXPECT_LE(std::abs(ratio / leading - 1.0), 1e-2) << q;
    }
}

TEST(Pq, PrecisionWarningPastCeiling) {
    EXPECT_TRUE(P_q_detailed(kPolyValidityCeiling, 2.0).warnings.empty());
    EXPECT_FALSE(P_q_detailed(kPolyValidityCeiling + 1, 2.0).warnings.empty());
}

TEST(HqDirect, Anchors) {
    EXPECT_EQ(H_q_direct(0, {1.3, 0.2}), ComplexValue(0.0));
    // H_1(s) = 2^3 / (0! 2!) (s/2)_1 = 2s.
    for (const auto& s : random_points(10, 5.0, 4)) EXPECT_LE(rel(H_q_direct(1, s), 2.0 * s), 1e-15);
}

TEST(HqDirect, AgreesWithHypergeometricForm) {
    const auto points = random_points(100, 10.0, 5);
    for (unsigned q = 0; q <= 15; ++q) {
        const double offset = (q % 2 == 0 ? 1.0 : -1.0) / to_double(RationalValue(factorial(q)));
        for (const auto& s : points) {
            const ComplexValue hyp = P_q(q, s);
            const ComplexValue direct = H_q_direct(q, s) + offset;
            EXPECT_LE(std::abs(hyp - direct), 1e-10 * std::abs(hyp)) << q << " " << s;
        }
    }
}

TEST(Pj, Anchors) {
    const double pi = std::numbers::pi;
    for (const auto& s : random_points(20, 6.0, 6)) {
        EXPECT_EQ(p_j(0, s), ComplexValue(1.0));
        EXPECT_LE(rel(p_j(1, s), (2.0 * s - 1.0) / (4.0 * pi)), 1e-15);
        for (unsigned j = 0; j <= 8; ++j) {
            const double two_j_fact = to_double(RationalValue(factorial(2 * j)));
            const double scale = std::pow(8.0 * pi, -double(j)) * two_j_fact;
            EXPECT_LE(std::abs(p_j(j, s) - scale * P_q(j, s)), 1e-13 * std::max(1.0, std::abs(p_j(j, s))));
            const double sign = j % 2 == 0 ? 1.0 : -1.0;
            const ComplexValue rearranged = p_j(j, s) / (scale / to_double(RationalValue(factorial(j))));
            EXPECT_LE(rel(rearranged, sign * hyp2f1_terminating(j, s / 2.0, 0.5, 2.0)), 1e-12);
        }
    }
}

TEST(D2F1, ClosedForms) {
    EXPECT_EQ(d2F1_ds(0, {0.3, 1.0}), ComplexValue(0.0));
    for (const auto& s : random_points(10, 5.0, 7)) {
        EXPECT_LE(std::abs(d2F1_ds(1, s) + 2.0), 1e-14);
        EXPECT_LE(rel(d2F1_ds(2, s), 8.0 / 3.0 * s - 4.0 / 3.0), 1e-14);
    }
}

TEST(D2F1, FormsAgree) {
    for (const auto& s : random_points(30, 8.0, 8)) {
        if (detail::distance_to_nonpositive_integer(s / 2.0) < 0.05) continue;
        for (unsigned q = 0; q <= 12; ++q) {
            const ComplexValue rational = d2F1_ds(q, s);
            const ComplexValue digamma_form = d2F1_ds(q, s, DerivativeForm::Digamma);
            EXPECT_LE(std::abs(rational - digamma_form), 1e-10 * std::max(1.0, std::abs(rational))) << q << " " << s;
        }
    }
    EXPECT_THROW(d2F1_ds(3, 0.0, DerivativeForm::Digamma), PoleError);
    EXPECT_NO_THROW(d2F1_ds(3, 0.0));
}

TEST(D2F1, CentralDifferences) {
    const auto points = random_points(50, 3.0, 9);
    const double h = 1e-6;
    for (unsigned q = 0; q <= 10; ++q) {
        for (const auto& s : points) {
            const ComplexValue fd = (hyp2f1_terminating(q, (s + h) / 2.0, 0.5, 2.0) -
                                     hyp2f1_terminating(q, (s - h) / 2.0, 0.5, 2.0)) /
                                    (2.0 * h);
            const ComplexValue exact = d2F1_ds(q, s);
            const double scale = std::max(std::abs(exact), std::abs(hyp2f1_terminating(q, s / 2.0, 0.5, 2.0)));
            EXPECT_LE(std::abs(fd - exact), 1e-5 * std::max(1.0, scale)) << q << " " << s;
        }
    }
}

TEST(D2F1, DerivativeSymmetry) {
    // P_q'(s) = (-1)^{q+1} P_q'(1 - s), and P_q' is d2F1_ds up to (-1)^q / q!.
    for (const auto& s : random_points(30, 6.0, 10)) {
        for (unsigned q = 0; q <= 15; ++q) {
            const double sign = q % 2 == 0 ? -1.0 : 1.0;
            const ComplexValue a = d2F1_ds(q, s);
            EXPECT_LE(std::abs(a - sign * d2F1_ds(q, 1.0 - s)), 1e-9 * std::max(1.0, std::abs(a))) << q;
        }
    }
}

TEST(DerivAtZero, Forms) {
    EXPECT_EQ(deriv_2F1_at_zero(0), 0.0);
    EXPECT_EQ(deriv_2F1_at_zero(1), -2.0);
    for (unsigned q = 0; q <= 15; ++q) {
        const auto forms = deriv_2F1_at_zero_forms(q);
        EXPECT_EQ(forms.half_sum, forms.three_f_two) << q;
    }
    for (unsigned q = 0; q <= 10; ++q) {
        const double at_zero = deriv_2F1_at_zero(q);
        EXPECT_LE(std::abs(d2F1_ds(q, 0.0).real() - at_zero), 1e-12 * std::max(1.0, std::abs(at_zero))) << q;
    }
}

TEST(Laguerre, Anchors) {
    for (double alpha : {-0.5, 0.0, 0.5, 2.0}) {
        for (const auto& s : random_points(10, 4.0, 11)) {
            EXPECT_EQ(laguerre_mellin_poly(0, alpha, s), ComplexValue(1.0));
            // (1 + alpha) [1 - 2 (s + alpha/2) / (alpha + 1)] = 1 - 2s.
            EXPECT_LE(rel(laguerre_mellin_poly(1, alpha, s), 1.0 - 2.0 * s), 1e-14);
        }
    }
    EXPECT_THROW(laguerre_mellin_poly(2, -1.0, 0.0), DomainError);
}

TEST(Laguerre, ReducesToPqAtHalf) {
    // alpha = -1/2 and s -> s/2 + 1/4 turn the Laguerre form into 2F1(-n, s/2; 1/2; 2).
    for (const auto& s : random_points(20, 5.0, 12)) {
        for (unsigned n = 0; n <= 10; ++n) {
            const ComplexValue laguerre = laguerre_mellin_poly(n, -0.5, s / 2.0 + 0.25);
            const double norm = to_double(RationalValue(factorial(n))) /
                                pochhammer_value<double>(0.5, n) * (n % 2 == 0 ? 1.0 : -1.0);
            EXPECT_LE(rel(norm * laguerre, P_q(n, s) * to_double(RationalValue(factorial(n)))), 1e-11) << n;
        }
    }
}

TEST(Laguerre, OddDegreeVanishesAtSymmetricPoint) {
    for (double alpha : {-0.5, 0.3, 1.0, 2.5}) {
        for (unsigned n = 1; n <= 11; n += 2) {
            // hypergeometric argument (alpha + 1) / 2 means s = 1/2.
            const ComplexValue value = laguerre_mellin_poly(n, alpha, 0.5);
            EXPECT_LE(std::abs(value), 1e-11) << n << " " << alpha;
        }
    }
}

TEST(GammaRatio, MatchesTerminatingSum) {
    EXPECT_EQ(hyp2f1_gamma_ratio(0, 0.7), ComplexValue(1.0));
    for (unsigned n = 1; n <= 11; n += 2) EXPECT_EQ(hyp2f1_gamma_ratio(n, 0.7), ComplexValue(0.0));
    // n = 2, alpha = 1/2 by hand: 1 - 2 (3/4) 2 / (3/2) + (3/4)(7/4) 4 / ((3/2)(5/2) 2) = 0.4.
    EXPECT_NEAR(hyp2f1_gamma_ratio(2, 0.5).real(), 0.4, 1e-12);
    for (double alpha : {0.5, 1.3, 2.25, -0.4, 0.0, 2.0, 4.0}) {
        for (unsigned n = 0; n <= 12; ++n) {
            const ComplexValue direct = hyp2f1_terminating(n, (alpha + 1.0) / 2.0, alpha + 1.0, 2.0);
            ComplexValue ratio;
            try {
                ratio = hyp2f1_gamma_ratio(n, alpha);
            } catch (const DomainError&) {
                continue;
            }
            EXPECT_LE(std::abs(ratio - direct), 1e-12 * std::max(1.0, std::abs(direct))) << n << " " << alpha;
        }
    }
}
