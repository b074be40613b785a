#include <gtest/gtest.h>

#include "glp/lemma_filters.hpp"
#include "glp/polynomial.hpp"
#include "oracles.hpp"

using namespace glp;

TEST(ShoreyTiwari, Examples) {
    EXPECT_EQ(shorey_tiwari_excludes(13, 9, 1), std::optional<std::uint64_t>(13));
    EXPECT_EQ(shorey_tiwari_excludes(272, 17, 1), std::nullopt);
    EXPECT_EQ(shorey_tiwari_excludes(4, 0, 2), std::optional<std::uint64_t>(3));
    EXPECT_THROW(shorey_tiwari_excludes(4, 0, 3), InvalidArgument);
    EXPECT_THROW(shorey_tiwari_excludes(4, 0, 0), InvalidArgument);
}

TEST(ShoreyTiwari, AgreesWithNPartition) {
    for (std::uint64_t n = 2; n <= 300; ++n) {
        for (std::uint64_t s = 0; s <= 90; ++s) {
            const auto part = n_partition(n, s);
            ASSERT_EQ(part.n0 * part.n1, n);
            ASSERT_EQ(std::gcd(part.n0, part.n1), 1u);
            ASSERT_EQ(shorey_tiwari_excludes(n, s, 1).has_value(), part.n0 > 1) << n << "," << s;
        }
    }
}

TEST(NPartitionType, Examples) {
    EXPECT_EQ(n_partition(13, 9), (NPartition{13, 1}));
    EXPECT_EQ(n_partition(272, 17), (NPartition{1, 272}));
    EXPECT_EQ(n_partition(1, 50), (NPartition{1, 1}));
}

TEST(Lemma6, Examples) {
    EXPECT_TRUE(lemma6_condition(272, 17, 17));
    EXPECT_FALSE(lemma6_condition(26, 12, 13));
    EXPECT_FALSE(lemma6_condition(22, 20, 11));
    const auto d = lemma6_details(272, 17, 17);
    EXPECT_EQ(d.d, 16u);
    EXPECT_EQ(d.s1, 1u);
    EXPECT_EQ(d.s0, 0u);
}

TEST(Lemma6, Preconditions) {
    EXPECT_THROW(lemma6_condition(4, 1, 2), PreconditionViolated);    // nu_2(4) = 2
    EXPECT_THROW(lemma6_condition(10, 25, 5), PreconditionViolated);  // s >= p^2
    EXPECT_THROW(lemma6_condition(10, 1, 3), PreconditionViolated);   // 3 does not divide 10
}

TEST(Lemma6, InvariantUnderShiftByPCubed) {
    for (std::uint64_t p : {3, 5, 7, 11, 13}) {
        for (std::uint64_t m = 1; m < p * p; ++m) {
            if (m % p == 0) continue;
            const std::uint64_t n = p * m;
            for (std::uint64_t s = 0; s < p * p; s += 3) {
                const bool base = lemma6_condition(n, s, p);
                for (std::uint64_t t = 1; t <= 3; ++t) ASSERT_EQ(lemma6_condition(n + p * p * p * t, s, p), base);
            }
        }
    }
}

TEST(Factor1, Examples) {
    const auto a = factor1_no_linear(130, 9);
    ASSERT_TRUE(a.no_linear_factor());
    // 9 and 130 share no binary digits, so p = 2 already has u = 0; p = 13
    // qualifies too (digits (10,9) in base 13, no carries).
    EXPECT_EQ(a.witness->prime, 2u);
    EXPECT_EQ(a.witness->kind, LinearCase::UZero);
    bool thirteen = false;
    for (const auto& c : factor1_trace(130, 9, factorize(130))) {
        if (c.prime == 13) thirteen = c.u == 0;
    }
    EXPECT_TRUE(thirteen);
    EXPECT_EQ(a.verdict(), "NoLinearFactor");
    EXPECT_FALSE(factor1_no_linear(144, 21).no_linear_factor());
    EXPECT_FALSE(factor1_no_linear(272, 17).no_linear_factor());
    EXPECT_EQ(factor1_no_linear(272, 17).verdict(), "Inconclusive");
}

TEST(Factor1, DegenerateSZeroScansPrimesOfN) {
    const auto trace = factor1_trace(12, 0, factorize(12));
    ASSERT_EQ(trace.size(), 2u);
    EXPECT_EQ(trace[0].prime, 2u);
    EXPECT_EQ(trace[1].prime, 3u);
}

TEST(Factor1, WitnessInvariants) {
    for (std::uint64_t n = 1; n <= 400; ++n) {
        for (std::uint64_t s = 0; s <= 88; ++s) {
            const auto out = factor1_no_linear(n, s);
            if (!out.witness) continue;
            const auto& w = *out.witness;
            ASSERT_TRUE(n % w.prime == 0 || (s + 1) % w.prime == 0);
            if (w.kind == LinearCase::UZero) {
                ASSERT_EQ(w.u, 0u);
            } else {
                ASSERT_GT(w.prime, 2u);
                ASSERT_GE(w.u, 1u);
                ASSERT_TRUE(w.z0.has_value());
                ASSERT_LT(*w.z0, w.prime);
                ASSERT_EQ(*w.z0, (n + s) % w.prime);
            }
        }
    }
}

TEST(Factor1, RatiosAreExact) {
    // (n, s) = (9, 47) at p = 3: u = nu_3(C(56, 47)) = 1, z0 = 56 mod 3 = 2,
    // nu_3(54) - nu_3(9) = 3 - 2 = 1, so the ratios are 2/3 and 1/3.
    const auto c = factor1_check_prime(9, 47, 3);
    EXPECT_EQ(c.u, 1u);
    EXPECT_EQ(c.z0, std::optional<std::uint64_t>(2));
    EXPECT_EQ(c.ratio_u, std::optional<Ratio>(Ratio(2, 3)));
    EXPECT_EQ(c.ratio_shift, std::optional<Ratio>(Ratio(1, 3)));
    EXPECT_EQ(c.passes, std::optional<LinearCase>(LinearCase::MaxLtOne));
}

TEST(FilterSoundnessProperty, NoWitnessCoexistsWithALinearFactor) {
    std::size_t witnesses = 0;
    for (std::uint64_t n = 1; n <= 60; ++n) {
        for (std::uint64_t s = 0; s <= 88; ++s) {
            const bool f1 = factor1_no_linear(n, s).no_linear_factor();
            const bool st = 2 * 1 <= n && shorey_tiwari_excludes(n, s, 1).has_value();
            if (!f1 && !st) continue;
            ++witnesses;
            const auto c = g1_polynomial(GlpInstance(n, s)).coefficients();
            ASSERT_FALSE(oracle::has_linear_factor(c)) << "n=" << n << " s=" << s;
        }
    }
    EXPECT_GT(witnesses, 3000u);
}

TEST(FilterSoundnessProperty, OracleMethodsAgreeForSmallDegree) {
    for (std::uint64_t n = 1; n <= 12; ++n) {
        for (std::uint64_t s = 0; s <= 88; ++s) {
            const auto c = g1_polynomial(GlpInstance(n, s)).coefficients();
            const bool by_divisors = !oracle::integer_roots_by_divisors(c).empty();
            if (oracle::rootless_prime_below_200(c)) {
                ASSERT_FALSE(by_divisors) << n << "," << s;
            }
            ASSERT_EQ(by_divisors, !oracle::integer_roots(c).empty()) << n << "," << s;
        }
    }
}

TEST(FilterSoundnessProperty, OracleFindsPlantedRoots) {
    // (x + 3)(x^2 + x + 1) and (x - 7)(x + 2)(x^3 + 2)
    EXPECT_EQ(oracle::integer_roots_by_divisors({3, 4, 4, 1}), (std::vector<BigInt>{-3}));
    EXPECT_EQ(oracle::integer_roots({3, 4, 4, 1}), (std::vector<BigInt>{-3}));
    const std::vector<BigInt> g{-28, -10, 2, -14, -5, 1};
    EXPECT_TRUE(oracle::has_linear_factor(g));
    EXPECT_EQ(oracle::integer_roots(g), (std::vector<BigInt>{-2, 7}));
}
