#include <gtest/gtest.h>

#include "glp/polynomial.hpp"
#include "oracles.hpp"

using namespace glp;

TEST(G1Polynomial, SmallExamples) {
    EXPECT_EQ(g1_polynomial(GlpInstance(2, 9)), (IntegerPolynomial{110, 20, 1}));
    EXPECT_EQ(g1_polynomial(GlpInstance(1, 9)), (IntegerPolynomial{10, 1}));
    EXPECT_EQ(g1_polynomial(GlpInstance(2, 9)).to_string(), "x^2 + 20*x + 110");
    EXPECT_THROW(GlpInstance(0, 3), InvalidArgument);
}

TEST(G1Polynomial, MatchesDirectFormula) {
    for (std::uint64_t n = 1; n <= 40; ++n) {
        for (std::uint64_t s : {0, 1, 9, 17, 50, 88}) {
            const auto f = g1_polynomial(GlpInstance(n, s));
            ASSERT_EQ(f.coefficients(), oracle::g1_direct(n, s)) << n << "," << s;
            EXPECT_TRUE(f.is_monic());
        }
    }
}

TEST(G1Polynomial, LargeDegreeConstantTerm) {
    // g1(0) = n!·C(n+s, s)
    const auto f = g1_polynomial(GlpInstance(300, 80));
    EXPECT_EQ(f.constant(), oracle::factorial(300) * oracle::binomial(380, 80));
    EXPECT_EQ(f[299], BigInt(300 * 81));
}

TEST(BCoefficient, Values) {
    const GlpInstance inst(5, 3);
    EXPECT_EQ(b_coefficient(inst, 0), BigInt(56));  // C(8, 5)
    EXPECT_EQ(b_coefficient(inst, 5), BigInt(1));
    EXPECT_THROW(b_coefficient(inst, 6), InvalidArgument);
}

TEST(G1Multipliers, ScalesCoefficients) {
    const GlpInstance inst(2, 9);
    EXPECT_EQ(G1_polynomial(inst, MultiplierVector{1, 2, 1}), (IntegerPolynomial{110, 40, 1}));
    EXPECT_EQ(G1_polynomial(inst, MultiplierVector{-1, 0, 1}), (IntegerPolynomial{-110, 0, 1}));
    EXPECT_THROW(G1_polynomial(inst, MultiplierVector{1, 1}), InvalidMultipliers);
    EXPECT_THROW(MultiplierVector({2, 1, 1}), InvalidMultipliers);
    EXPECT_THROW(MultiplierVector({1, 1, 0}), InvalidMultipliers);
}

TEST(IntegerPolynomialType, RejectsZeroLeading) {
    EXPECT_THROW(IntegerPolynomial({1, 0}), InvalidPolynomial);
    EXPECT_THROW(IntegerPolynomial(std::vector<BigInt>{}), InvalidPolynomial);
}

TEST(GeneralLaguerre, SpecializesToG1) {
    // At alpha = -n-s-1, n!·L_n^(alpha)(x) = (-1)^n g1(x).
    for (std::uint64_t n = 1; n <= 15; ++n) {
        for (std::uint64_t s : {0, 3, 9, 20}) {
            const GlpInstance inst(n, s);
            const auto l = glp_general(n, inst.alpha());
            const auto g = g1_polynomial(inst);
            const BigRational scale = BigRational(oracle::factorial(n)) * (n % 2 ? -1 : 1);
            for (std::size_t j = 0; j <= n; ++j) ASSERT_EQ(l[j] * scale, BigRational(g[j])) << n << "," << s << "," << j;
        }
    }
}

TEST(GeneralLaguerre, ClassicalValues) {
    // L_2^(0)(x) = 1 - 2x + x^2/2
    const auto l = glp_general(2, BigRational(0));
    EXPECT_EQ(l[0], BigRational(1));
    EXPECT_EQ(l[1], BigRational(-2));
    EXPECT_EQ(l[2], BigRational(1, 2));
}

TEST(DiscriminantProperty, SchurFormulaMatchesSylvesterResultant) {
    for (std::uint64_t n = 1; n <= 6; ++n) {
        for (int a = -10; a <= 10; ++a) {
            const BigRational alpha(a);
            std::vector<BigRational> f = glp_general(n, alpha);
            for (auto& c : f) c *= BigRational(oracle::factorial(n));
            ASSERT_EQ(discriminant_glp(n, alpha), oracle::discriminant_sylvester(f)) << "n=" << n << " alpha=" << a;
        }
    }
}

TEST(DiscriminantProperty, RationalAlpha) {
    for (std::uint64_t n = 2; n <= 5; ++n) {
        const BigRational alpha(-7, 3);
        std::vector<BigRational> f = glp_general(n, alpha);
        for (auto& c : f) c *= BigRational(oracle::factorial(n));
        EXPECT_EQ(discriminant_glp(n, alpha), oracle::discriminant_sylvester(f));
    }
}
