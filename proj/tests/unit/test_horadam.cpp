#include <gtest/gtest.h>

#include <cmath>
#include <limits>
#include <stdexcept>

#include "ar2/error.hpp"
#include "ar2/horadam.hpp"
#include "support/oracles.hpp"

namespace hd = ar2::horadam;
using ar2::test::close;

namespace {

bool agree(double a, double b, double rel) { return close(a, b, rel, 1e-12, 1e-6); }

std::vector<double> grid_values(double lo, double hi, int steps) {
    std::vector<double> v;
    for (int i = 0; i < steps; ++i) v.push_back(lo + (hi - lo) * i / (steps - 1));
    return v;
}

}  // namespace

TEST(Binomial, SmallValues) {
    EXPECT_EQ(hd::binomial(5, 2), 10u);
    EXPECT_EQ(hd::binomial(7, 0), 1u);
    EXPECT_EQ(hd::binomial(7, 7), 1u);
    EXPECT_EQ(hd::binomial(3, 5), 0u);
}

TEST(Binomial, MatchesPascalOracle) {
    EXPECT_EQ(hd::binomial(60, 30), static_cast<ar2::exact_uint>(118264581564861424ULL));
    for (std::size_t n = 0; n <= 120; n += 7) {
        for (std::size_t k = 0; k <= n; ++k) {
            ASSERT_TRUE(hd::binomial(n, k) == ar2::test::pascal_binomial(n, k)) << n << " choose " << k;
        }
    }
}

TEST(Binomial, OverflowIsReported) {
    EXPECT_NO_THROW((void)hd::binomial(128, 64));
    EXPECT_THROW((void)hd::binomial(140, 70), ar2::OverflowError);
}

TEST(Recursion, WorkedExamples) {
    const auto a = hd::recursive({0.5, 0.3}, 4).values;
    const std::vector<double> expected = {1, 0.5, 0.55, 0.425, 0.3775};
    ASSERT_EQ(a.size(), expected.size());
    for (std::size_t i = 0; i < a.size(); ++i) EXPECT_NEAR(a[i], expected[i], 1e-15);

    EXPECT_EQ(hd::recursive({1, 1}, 6).values, (std::vector<double>{1, 1, 2, 3, 5, 8, 13}));
    EXPECT_EQ(hd::recursive({0, 0}, 3).values, (std::vector<double>{1, 0, 0, 0}));
    EXPECT_EQ(hd::recursive({0.7, -0.2}, 0).values, (std::vector<double>{1}));
}

TEST(Recursion, InitialValuesAreExact) {
    const auto seq = hd::recursive({0.123456789, -0.987654321}, 5);
    EXPECT_EQ(seq.values[0], 1.0);
    EXPECT_EQ(seq.values[1], 0.123456789);
    EXPECT_EQ(seq.order(), 5u);
    EXPECT_EQ(seq.method, hd::Method::Recursion);
}

TEST(Recursion, RejectsNonFinite) {
    EXPECT_THROW((void)hd::recursive({std::nan(""), 0.1}, 3), std::invalid_argument);
    EXPECT_THROW((void)hd::closed_form({0.1, std::numeric_limits<double>::infinity()}, 3),
                 std::invalid_argument);
}

TEST(ClosedForm, WorkedExamples) {
    EXPECT_NEAR(hd::closed_form({0.5, 0.3}, 2), 0.55, 1e-16);
    EXPECT_NEAR(hd::closed_form({0.0, 0.3}, 4), 0.09, 1e-17);
    EXPECT_EQ(hd::closed_form({0.0, 0.3}, 5), 0.0);
    EXPECT_EQ(hd::closed_form({-1.7, 0.4}, 0), 1.0);
    EXPECT_EQ(hd::closed_form({0.0, 0.0}, 0), 1.0);
}

TEST(ClosedForm, OverflowPropagates) {
    EXPECT_NO_THROW((void)hd::closed_form({0.1, 0.1}, 180));
    EXPECT_THROW((void)hd::closed_form({0.1, 0.1}, 400), ar2::OverflowError);
}

TEST(PowerSeries, WorkedExamples) {
    const auto a = hd::power_series({0.5, 0.3}, 2).values;
    EXPECT_DOUBLE_EQ(a[0], 1.0);
    EXPECT_DOUBLE_EQ(a[1], 0.5);
    EXPECT_NEAR(a[2], 0.55, 1e-16);
    EXPECT_EQ(hd::power_series({1, 1}, 4).values, (std::vector<double>{1, 1, 2, 3, 5}));
    EXPECT_EQ(hd::power_series({0, 1}, 5).values, (std::vector<double>{1, 0, 1, 0, 1, 0}));
}

TEST(PowerSeries, ProductWithDenominatorIsOne) {
    const std::vector<double> denom = {1.0, -0.8, 0.45};
    const auto recip = hd::reciprocal_series(denom, 40);
    const auto prod = ar2::test::series_product(recip, denom, 40);
    EXPECT_DOUBLE_EQ(prod[0], 1.0);
    for (std::size_t u = 1; u <= 40; ++u) EXPECT_NEAR(prod[u], 0.0, 1e-15) << u;
}

TEST(PowerSeries, GeneralDenominator) {
    // 1 / (2 - t) = sum t^u / 2^(u+1)
    const std::vector<double> denom = {2.0, -1.0};
    const auto recip = hd::reciprocal_series(denom, 10);
    for (std::size_t u = 0; u <= 10; ++u) EXPECT_EQ(recip[u], std::ldexp(1.0, -static_cast<int>(u) - 1));
    EXPECT_THROW((void)hd::reciprocal_series(std::vector<double>{0.0, 1.0}, 3), std::invalid_argument);
}

TEST(Polynomial, LowDegrees) {
    const hd::Params p{0.5, 0.3};
    EXPECT_EQ(hd::polynomial(p, 0).coefficients(), (std::vector<double>{1}));
    EXPECT_EQ(hd::polynomial(p, 1).coefficients(), (std::vector<double>{0, 0.5}));
    const auto c2 = hd::polynomial(p, 2).coefficients();
    ASSERT_EQ(c2.size(), 3u);
    EXPECT_DOUBLE_EQ(c2[0], 0.3);
    EXPECT_EQ(c2[1], 0.0);
    EXPECT_DOUBLE_EQ(c2[2], 0.25);
}

TEST(Polynomial, Evaluation) {
    const hd::Params p{0.5, 0.3};
    EXPECT_NEAR(hd::evaluate(hd::polynomial(p, 2), 0.0), 0.3, 1e-16);
    EXPECT_EQ(hd::evaluate(hd::polynomial(p, 1), 2.0), 1.0);
}

TEST(Polynomial, MatchesCoefficientRecursion) {
    for (double phi1 : {-0.9, 0.35, 1.0}) {
        for (double phi2 : {-1.0, -0.4, 0.6}) {
            const auto oracle = ar2::test::horadam_polynomials_ld(phi1, phi2, 30);
            for (std::size_t u = 0; u <= 30; ++u) {
                const auto c = hd::polynomial({phi1, phi2}, u).coefficients();
                ASSERT_EQ(c.size(), u + 1);
                for (std::size_t j = 0; j <= u; ++j) {
                    EXPECT_TRUE(close(c[j], static_cast<double>(oracle[u][j]), 1e-13, 1e-300, 1e-300))
                        << phi1 << "," << phi2 << " u=" << u << " j=" << j;
                }
            }
        }
    }
}

TEST(Polynomial, LeadingCoefficientAndParity) {
    for (double phi1 : {-0.8, 0.3, 1.0}) {
        for (double phi2 : {-0.5, 0.7}) {
            for (std::size_t u = 0; u <= 40; ++u) {
                const auto poly = hd::polynomial({phi1, phi2}, u);
                const auto c = poly.coefficients();
                EXPECT_DOUBLE_EQ(c[u], std::pow(phi1, static_cast<double>(u)));
                for (std::size_t j = 0; j <= u; ++j) {
                    if ((u - j) % 2 == 1) { EXPECT_EQ(c[j], 0.0) << "u=" << u << " j=" << j; }
                }
            }
        }
    }
}

TEST(Polynomial, SatisfiesThreeTermRecursion) {
    for (double phi1 : {-1.0, -0.3, 0.6, 1.0}) {
        for (double phi2 : {-1.0, -0.45, 0.2, 1.0}) {
            for (double x : {-2.0, -1.3, 0.0, 0.7, 2.0}) {
                std::vector<double> values;
                for (std::size_t u = 0; u <= 40; ++u) values.push_back(hd::evaluate(hd::polynomial({phi1, phi2}, u), x));
                for (std::size_t u = 2; u <= 40; ++u) {
                    const double rhs = phi1 * x * values[u - 1] + phi2 * values[u - 2];
                    EXPECT_TRUE(close(values[u], rhs, 1e-12, 1e-12, 1e-6))
                        << phi1 << "," << phi2 << " x=" << x << " u=" << u << ": " << values[u] << " vs " << rhs;
                }
            }
        }
    }
}

TEST(Polynomial, EvaluationAtOneGivesHoradamNumbers) {
    for (double phi1 : {-0.7, 0.0, 0.5, 0.9}) {
        for (double phi2 : {-0.8, 0.3}) {
            for (std::size_t u = 0; u <= 50; ++u) {
                const hd::Params p{phi1, phi2};
                EXPECT_TRUE(agree(hd::evaluate(hd::polynomial(p, u), 1.0), hd::closed_form(p, u), 1e-14));
            }
        }
    }
}

TEST(Invariants, ThreeWayAgreementOnGrid) {
    for (double phi1 : grid_values(-0.9, 0.9, 13)) {
        for (double phi2 : grid_values(-0.9, 0.9, 13)) {
            const hd::Params p{phi1, phi2};
            const auto rec = hd::recursive(p, 50).values;
            const auto ser = hd::power_series(p, 50).values;
            const auto cf = hd::closed_form_sequence(p, 50).values;
            for (std::size_t u = 0; u <= 50; ++u) {
                ASSERT_TRUE(agree(rec[u], cf[u], 1e-10)) << phi1 << "," << phi2 << " u=" << u;
                ASSERT_TRUE(agree(rec[u], ser[u], 1e-10)) << phi1 << "," << phi2 << " u=" << u;
                ASSERT_EQ(cf[u], hd::closed_form(p, u));
            }
        }
    }
}

TEST(Invariants, AgreesWithLongDoubleRecursion) {
    for (double phi1 : {0.5, -1.2, 1.9}) {
        for (double phi2 : {0.3, -0.95}) {
            const auto oracle = ar2::test::horadam_ld(phi1, phi2, 60);
            const auto rec = hd::recursive({phi1, phi2}, 60).values;
            for (std::size_t u = 0; u <= 60; ++u) {
                EXPECT_TRUE(agree(hd::closed_form({phi1, phi2}, u), static_cast<double>(oracle[u]), 1e-12))
                    << phi1 << "," << phi2 << " u=" << u;
                if (phi2 > 0) { EXPECT_TRUE(agree(rec[u], static_cast<double>(oracle[u]), 1e-12)); }
            }
        }
    }
}

TEST(Invariants, FibonacciExact) {
    const auto fib = ar2::test::fibonacci(71);
    const auto exact = hd::recursive_exact(1, 1, 70);
    for (std::size_t u = 0; u <= 70; ++u) ASSERT_TRUE(exact[u] == fib[u + 1]) << u;
    EXPECT_EQ(ar2::to_string(exact[70]), "308061521170129");
}

TEST(Invariants, ExactModeOverflowAndNegatives) {
    EXPECT_THROW((void)hd::recursive_exact(1, 1, 200), ar2::OverflowError);
    const auto a = hd::recursive_exact(2, -3, 6);  // 1, 2, 1, -4, -11, -10, 13
    EXPECT_EQ(ar2::to_string(a[4]), "-11");
    EXPECT_EQ(ar2::to_string(a[6]), "13");
    EXPECT_TRUE(hd::has_exact_representation({1, -2}));
    EXPECT_FALSE(hd::has_exact_representation({1.5, 1}));
}

TEST(Invariants, DegeneratePhi1Zero) {
    for (double phi2 : {-0.9, -0.3, 0.4, 0.95}) {
        const hd::Params p{0.0, phi2};
        const auto rec = hd::recursive(p, 41).values;
        const auto ser = hd::power_series(p, 41).values;
        for (std::size_t m = 0; m <= 20; ++m) {
            const double even = std::pow(phi2, static_cast<double>(m));
            EXPECT_TRUE(agree(rec[2 * m], even, 1e-13));
            EXPECT_TRUE(agree(ser[2 * m], even, 1e-13));
            EXPECT_TRUE(agree(hd::closed_form(p, 2 * m), even, 1e-13));
            EXPECT_EQ(rec[2 * m + 1], 0.0);
            EXPECT_EQ(ser[2 * m + 1], 0.0);
            EXPECT_EQ(hd::closed_form(p, 2 * m + 1), 0.0);
        }
    }
}
