#include <gtest/gtest.h>

#include "glp/candidate_sieve.hpp"
#include "glp/fixtures.hpp"
#include "oracles.hpp"

using namespace glp;

namespace {

/// H_{s,c} from first principles: every member divides lcm(1..s), so walk
/// those divisors and test the definition with trial division.
std::vector<BigInt> h_by_divisors(std::uint64_t s, std::int64_t c_num, std::int64_t c_den) {
    std::vector<std::pair<std::uint64_t, unsigned>> lcm;
    for (std::uint64_t p = 2; p <= s; ++p) {
        if (!oracle::is_prime_trial(p)) continue;
        unsigned e = 0;
        for (std::uint64_t q = p; q <= s; q *= p) ++e;
        lcm.push_back({p, e});
    }
    std::vector<std::uint64_t> divisors{1};
    for (auto [p, e] : lcm) {
        const std::size_t count = divisors.size();
        std::uint64_t pk = 1;
        for (unsigned k = 1; k <= e; ++k) {
            pk *= p;
            for (std::size_t i = 0; i < count; ++i) divisors.push_back(divisors[i] * pk);
        }
    }
    std::vector<BigInt> out;
    for (std::uint64_t n : divisors) {
        if (n <= 127) continue;
        bool ok = true;
        for (std::uint64_t p = 2; p <= s && ok; ++p) {
            if (n % p != 0 || !oracle::is_prime_trial(p)) continue;
            std::uint64_t pk = 1, m = n;
            while (m % p == 0) {
                m /= p;
                pk *= p;
            }
            ok = pk <= s;
            // p > s/c  <=>  p·c_num > s·c_den
            if (ok && static_cast<std::int64_t>(p) * c_num > static_cast<std::int64_t>(s) * c_den) {
                const std::uint64_t d = (n / p) % p;
                ok = d + s / p >= p;
            }
        }
        if (ok) out.push_back(n);
    }
    std::sort(out.begin(), out.end());
    return out;
}

}  // namespace

TEST(Schedule, Values) {
    EXPECT_EQ(c_schedule(10), Ratio(3));
    EXPECT_EQ(c_schedule(12), Ratio(171, 50));
    EXPECT_EQ(c_schedule(35), Ratio(171, 50));
    EXPECT_EQ(c_schedule(40), Ratio(11, 2));
    EXPECT_EQ(c_schedule(70), Ratio(77, 10));
    EXPECT_THROW(c_schedule(8), OutOfScheduledRange);
    EXPECT_THROW(c_schedule(89), OutOfScheduledRange);
}

TEST(Schedule, ParseRatio) {
    EXPECT_EQ(parse_ratio("77/10"), Ratio(77, 10));
    EXPECT_EQ(parse_ratio("7.7"), Ratio(77, 10));
    EXPECT_EQ(parse_ratio("3.42"), Ratio(171, 50));
    EXPECT_EQ(parse_ratio("3"), Ratio(3));
    EXPECT_THROW(parse_ratio("x"), InvalidArgument);
    EXPECT_THROW(parse_ratio("1/0"), InvalidArgument);
}

TEST(Params, Validation) {
    EXPECT_THROW(SieveParams(8, Ratio(2)), InvalidArgument);
    EXPECT_THROW(SieveParams(20, Ratio(1)), InvalidArgument);
    EXPECT_THROW(SieveParams(20, Ratio(5)), PreconditionViolated);
    EXPECT_NO_THROW(SieveParams(25, Ratio(5)));
}

TEST(Params, ExactThreshold) {
    const SieveParams p(35, Ratio(171, 50));
    EXPECT_EQ(p.floor_threshold(), 10u);
    for (std::uint64_t q = 1; q <= 40; ++q) {
        // q > 35·50/171 exactly
        EXPECT_EQ(p.is_large(q), q * 171 > 35 * 50) << q;
    }
    const SieveParams r(77, Ratio(77, 10));
    EXPECT_FALSE(r.is_large(10));  // 10 = 77/7.7 exactly, not above it
    EXPECT_TRUE(r.is_large(11));
}

TEST(Membership, Examples) {
    const SieveParams p17(17, Ratio(171, 50));
    const auto a = membership_test(272, p17);
    EXPECT_TRUE(a.member);
    ASSERT_EQ(a.trace.size(), 2u);
    EXPECT_EQ(a.trace[0].decisive, MembershipCondition::PowerBound);
    EXPECT_EQ(a.trace[1].decisive, MembershipCondition::ResidueBound);
    EXPECT_EQ(a.trace[1].d, std::optional<std::uint64_t>(16));
    EXPECT_FALSE(membership_test(128, p17).member);
    EXPECT_FALSE(membership_test(100, SieveParams(80, Ratio(77, 10))).member);
}

TEST(EnumerateH, MatchesDivisorOracle) {
    for (std::uint64_t s = 9; s <= 40; ++s) {
        const Ratio c = c_schedule(s);
        const auto h = enumerate_h(SieveParams(s, c));
        ASSERT_EQ(h.values(), h_by_divisors(s, c.numerator(), c.denominator())) << "s=" << s;
    }
    for (auto [s, num, den] : {std::tuple<std::uint64_t, std::int64_t, std::int64_t>{20, 2, 1}, {30, 5, 2}, {36, 6, 1}}) {
        const auto h = enumerate_h(SieveParams(s, Ratio(num, den)));
        ASSERT_EQ(h.values(), h_by_divisors(s, num, den)) << "s=" << s;
    }
}

TEST(EnumerateH, MembersSatisfyDefinitionAndPartition) {
    for (std::uint64_t s : {17, 26, 44, 61, 80}) {
        const SieveParams params(s, c_schedule(s));
        const auto h = enumerate_h(params);
        EXPECT_EQ(h.part_size(1) + h.part_size(2), h.size());
        for (std::size_t i = 0; i < h.members.size(); ++i) {
            const auto& m = h.members[i];
            if (i) {
                ASSERT_LT(h.members[i - 1].n, m.n);
            }
            ASSERT_EQ(m.factorization.value(), m.n);
            ASSERT_TRUE(membership_test(m.n, params).member);
            const bool small = m.factorization.largest_prime().value_or(1) <= params.floor_threshold();
            ASSERT_EQ(m.part, small ? 1 : 2);
        }
    }
}

TEST(EnumerateH, IndependentOfJobs) {
    const SieveParams params(70, c_schedule(70));
    const auto a = enumerate_h(params, 1).values();
    EXPECT_EQ(enumerate_h(params, 3).values(), a);
    EXPECT_EQ(enumerate_h(params, 8).values(), a);
}

TEST(EnumerateH, ContainsTMember) {
    const auto h = enumerate_h(SieveParams(17, c_schedule(17)));
    const auto v = h.values();
    EXPECT_TRUE(std::binary_search(v.begin(), v.end(), BigInt(272)));
}

TEST(RunSieve, Examples) {
    auto ns = [](std::uint64_t s) {
        std::vector<BigInt> out;
        for (const auto& sv : run_sieve(s).survivors) out.push_back(sv.n);
        return out;
    };
    EXPECT_EQ(ns(17), std::vector<BigInt>{272});
    EXPECT_EQ(ns(26), (std::vector<BigInt>{144, 312, 600}));
    EXPECT_TRUE(ns(9).empty());
}

TEST(RunSieve, SurvivorsCarryFailingTraces) {
    for (const auto& sv : run_sieve(26).survivors) {
        ASSERT_FALSE(sv.trace.empty());
        for (const auto& c : sv.trace) EXPECT_FALSE(c.passes.has_value());
    }
}

TEST(Remark1, Examples) {
    EXPECT_TRUE(remark1_equal(19, Ratio(171, 50)));
    EXPECT_TRUE(remark1_hypotheses(19, Ratio(171, 50)));
    EXPECT_TRUE(remark1_equal(47, Ratio(11, 2)));
}

TEST(Remark1, ListedValuesAreEqual) {
    const std::vector<std::pair<Ratio, std::vector<std::uint64_t>>> listed = {
        {Ratio(171, 50), {19, 27, 29, 34}},
        {Ratio(11, 2), {39, 41, 47, 49, 53, 55, 59}},
        {Ratio(77, 10), {62, 69, 71, 74, 79, 83, 87}}};
    for (const auto& [c, ss] : listed) {
        for (auto s : ss) {
            EXPECT_TRUE(remark1_equal(s, c)) << s;
        }
    }
}

TEST(Remark1, HypothesesAloneDoNotSuffice) {
    // 16 = 2^4 becomes an admissible prime power at s + 1 = 16.
    EXPECT_TRUE(remark1_hypotheses(15, Ratio(171, 50)));
    EXPECT_FALSE(remark1_equal(15, Ratio(171, 50)));
}

TEST(TConsistency, EveryPairLiesInH) {
    const auto table = ExceptionTableT::load(fixture_dir());
    for (const auto& p : table.pairs()) {
        EXPECT_TRUE(membership_test(p.n, SieveParams(p.s, c_schedule(p.s))).member) << p.n << "," << p.s;
    }
}
