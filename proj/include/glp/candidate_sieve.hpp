#pragma once

// Enumeration of the candidate degree sets H_{s,c}:
//
//   n > 127, and for every prime p | n: p^nu_p(n) <= s, and if p > s/c then
//   d + [s/p] >= p where d = (n/p) mod p, 1 <= d < p.
//
// Since s >= c^2, a prime above s/c exceeds sqrt(s) and divides a member at
// most once. Every member is therefore S·p_1···p_r with S built from prime
// powers p^e <= s over primes p <= s/c ("smooth part"), and distinct primes
// s/c < p_i <= s ("large primes"). The enumeration walks all smooth parts
// against all subsets of large primes and checks the residue condition at
// the leaves using residues only; the exact product is formed for members.

#include <algorithm>
#include <atomic>
#include <cstdint>
#include <limits>
#include <optional>
#include <set>
#include <string>
#include <thread>
#include <vector>

#include "glp/errors.hpp"
#include "glp/lemma_filters.hpp"
#include "glp/numeric.hpp"
#include "glp/valuation.hpp"

namespace glp {

/// (s, c) with c > 1 exact and s >= c^2.
class SieveParams {
public:
    SieveParams(std::uint64_t s, Ratio c) : s_(s), c_(c) {
        if (s < 9) throw InvalidArgument("sieve parameter s must be >= 9");
        if (c <= Ratio(1)) throw InvalidArgument("sieve parameter c must exceed 1");
        // s >= c^2  <=>  s·den^2 >= num^2
        const auto num = static_cast<unsigned __int128>(c.numerator());
        const auto den = static_cast<unsigned __int128>(c.denominator());
        if (static_cast<unsigned __int128>(s) * den * den < num * num) {
            throw PreconditionViolated("sieve requires s >= c^2");
        }
    }

    std::uint64_t s() const noexcept { return s_; }
    const Ratio& c() const noexcept { return c_; }

    /// s/c, exact.
    Ratio threshold() const { return Ratio(static_cast<std::int64_t>(s_)) / c_; }

    /// [s/c]
    std::uint64_t floor_threshold() const { return static_cast<std::uint64_t>(glp::floor(threshold())); }

    /// p > s/c, by cross-multiplication: p·num > s·den.
    bool is_large(std::uint64_t p) const {
        return static_cast<unsigned __int128>(p) * static_cast<std::uint64_t>(c_.numerator()) >
               static_cast<unsigned __int128>(s_) * static_cast<std::uint64_t>(c_.denominator());
    }

    friend bool operator==(const SieveParams&, const SieveParams&) = default;

private:
    std::uint64_t s_;
    Ratio c_;
};

/// c for 9 <= s <= 88: 3, 3.42, 5.5 or 7.7, as exact rationals.
inline Ratio c_schedule(std::uint64_t s) {
    if (s >= 9 && s <= 11) return Ratio(3);
    if (s >= 12 && s <= 35) return Ratio(171, 50);
    if (s >= 36 && s <= 60) return Ratio(11, 2);
    if (s >= 61 && s <= 88) return Ratio(77, 10);
    throw OutOfScheduledRange("no scheduled c for s = " + std::to_string(s) + " (schedule covers 9..88)");
}

/// Parses "77/10", "7.7" or "3" into an exact rational.
inline Ratio parse_ratio(const std::string& text) {
    auto parse_int = [&](const std::string& t) -> std::int64_t {
        if (t.empty() || !std::all_of(t.begin(), t.end(), [](char ch) { return ch >= '0' && ch <= '9'; })) {
            throw InvalidArgument("cannot parse rational '" + text + "'");
        }
        return std::stoll(t);
    };
    if (auto slash = text.find('/'); slash != std::string::npos) {
        const std::int64_t den = parse_int(text.substr(slash + 1));
        if (den == 0) throw InvalidArgument("zero denominator in '" + text + "'");
        return Ratio(parse_int(text.substr(0, slash)), den);
    }
    if (auto dot = text.find('.'); dot != std::string::npos) {
        const std::string frac = text.substr(dot + 1);
        std::int64_t den = 1;
        for (std::size_t i = 0; i < frac.size(); ++i) den *= 10;
        return Ratio(parse_int(text.substr(0, dot)) * den + (frac.empty() ? 0 : parse_int(frac)), den);
    }
    return Ratio(parse_int(text));
}

struct HSetMember {
    BigInt n;
    Factorization factorization;
    int part = 1;  ///< 1 iff P(n) <= [s/c]
};

struct HSet {
    SieveParams params;
    std::vector<HSetMember> members;  ///< strictly ascending in n

    std::size_t size() const noexcept { return members.size(); }

    std::size_t part_size(int part) const {
        return static_cast<std::size_t>(
            std::count_if(members.begin(), members.end(), [&](const HSetMember& m) { return m.part == part; }));
    }

    std::vector<BigInt> values() const {
        std::vector<BigInt> out;
        out.reserve(members.size());
        for (const auto& m : members) out.push_back(m.n);
        return out;
    }
};

namespace detail {

inline std::uint64_t saturating_mul(std::uint64_t a, std::uint64_t b) {
    unsigned __int128 r = static_cast<unsigned __int128>(a) * b;
    return r > std::numeric_limits<std::uint64_t>::max() ? std::numeric_limits<std::uint64_t>::max()
                                                         : static_cast<std::uint64_t>(r);
}

struct SmoothPart {
    std::uint64_t value = 1;  // saturating
    std::vector<unsigned> exponents;
    std::vector<std::uint32_t> residues;  // value mod each large prime
};

class HEnumerator {
public:
    explicit HEnumerator(const SieveParams& params) : params_(params) {
        const std::uint64_t s = params.s();
        for (std::uint64_t p : primes_in(1, static_cast<std::int64_t>(s))) {
            (params.is_large(p) ? large_ : small_).push_back(p);
        }
        for (std::uint64_t p : large_) min_residue_.push_back(p - s / p);
        build_smooth({}, 0, 1);
    }

    std::size_t task_count() const { return std::size_t{1} << prefix_bits(); }

    /// Members whose membership pattern on the first prefix_bits() large
    /// primes equals the bits of `task`.
    std::vector<HSetMember> run_task(std::size_t task) const {
        std::vector<HSetMember> out;
        const unsigned bits = prefix_bits();
        std::vector<std::size_t> chosen;
        std::vector<std::uint32_t> rem(large_.size(), 1);
        std::uint64_t product = 1;
        for (unsigned i = 0; i < bits; ++i) {
            if ((task >> i) & 1) include(i, chosen, rem, product);
        }
        visit(bits, chosen, rem, product, out);
        return out;
    }

private:
    unsigned prefix_bits() const { return static_cast<unsigned>(std::min<std::size_t>(large_.size(), 6)); }

    void build_smooth(std::vector<unsigned> exps, std::size_t idx, std::uint64_t value) {
        if (idx == small_.size()) {
            SmoothPart part;
            part.value = value;
            part.exponents = std::move(exps);
            for (std::uint64_t q : large_) {
                std::uint64_t r = 1;
                for (std::size_t i = 0; i < small_.size(); ++i) {
                    for (unsigned e = 0; e < part.exponents[i]; ++e) r = r * small_[i] % q;
                }
                part.residues.push_back(static_cast<std::uint32_t>(r));
            }
            smooth_.push_back(std::move(part));
            return;
        }
        const std::uint64_t p = small_[idx];
        std::uint64_t power = 1;
        for (unsigned e = 0;; ++e) {
            exps.push_back(e);
            build_smooth(exps, idx + 1, saturating_mul(value, power));
            exps.pop_back();
            if (power > params_.s() / p) break;
            power *= p;
        }
    }

    void include(std::size_t i, std::vector<std::size_t>& chosen, std::vector<std::uint32_t>& rem,
                 std::uint64_t& product) const {
        const std::uint64_t p = large_[i];
        for (std::size_t q = 0; q < large_.size(); ++q) {
            if (q != i) rem[q] = static_cast<std::uint32_t>(rem[q] * p % large_[q]);
        }
        chosen.push_back(i);
        product = saturating_mul(product, p);
    }

    void visit(std::size_t idx, std::vector<std::size_t>& chosen, std::vector<std::uint32_t>& rem,
               std::uint64_t product, std::vector<HSetMember>& out) const {
        if (idx == large_.size()) {
            leaf(chosen, rem, product, out);
            return;
        }
        visit(idx + 1, chosen, rem, product, out);
        std::vector<std::uint32_t> next = rem;
        include(idx, chosen, next, product);
        visit(idx + 1, chosen, next, product, out);
        chosen.pop_back();
    }

    void leaf(const std::vector<std::size_t>& chosen, const std::vector<std::uint32_t>& rem,
              std::uint64_t product, std::vector<HSetMember>& out) const {
        for (const SmoothPart& part : smooth_) {
            if (saturating_mul(part.value, product) <= 127) continue;
            bool ok = true;
            // Largest primes first: they carry the tightest residue windows.
            for (std::size_t k = chosen.size(); k-- > 0;) {
                const std::size_t i = chosen[k];
                const std::uint64_t d = static_cast<std::uint64_t>(part.residues[i]) * rem[i] % large_[i];
                if (d < min_residue_[i]) {
                    ok = false;
                    break;
                }
            }
            if (ok) out.push_back(make_member(part, chosen));
        }
    }

    HSetMember make_member(const SmoothPart& part, const std::vector<std::size_t>& chosen) const {
        std::vector<PrimePower> entries;
        BigInt n = 1;
        for (std::size_t i = 0; i < small_.size(); ++i) {
            if (part.exponents[i] == 0) continue;
            entries.push_back({small_[i], part.exponents[i]});
            for (unsigned e = 0; e < part.exponents[i]; ++e) n *= small_[i];
        }
        for (std::size_t i : chosen) {
            entries.push_back({large_[i], 1});
            n *= large_[i];
        }
        std::sort(entries.begin(), entries.end(), [](const PrimePower& a, const PrimePower& b) { return a.prime < b.prime; });
        return HSetMember{std::move(n), Factorization(std::move(entries)), chosen.empty() ? 1 : 2};
    }

    SieveParams params_;
    std::vector<std::uint64_t> small_;
    std::vector<std::uint64_t> large_;
    std::vector<std::uint64_t> min_residue_;  // p - [s/p]
    std::vector<SmoothPart> smooth_;
};

}  // namespace detail

/// Exact enumeration of H_{s,c}. Work is split into blocks by membership of
/// the first few large primes; the merged result does not depend on `jobs`.
inline HSet enumerate_h(const SieveParams& params, unsigned jobs = 1) {
    const detail::HEnumerator enumerator(params);
    const std::size_t tasks = enumerator.task_count();
    std::vector<std::vector<HSetMember>> results(tasks);
    if (jobs <= 1) {
        for (std::size_t t = 0; t < tasks; ++t) results[t] = enumerator.run_task(t);
    } else {
        std::atomic<std::size_t> next{0};
        std::vector<std::thread> workers;
        for (unsigned w = 0; w < jobs; ++w) {
            workers.emplace_back([&] {
                for (std::size_t t = next++; t < tasks; t = next++) results[t] = enumerator.run_task(t);
            });
        }
        for (auto& th : workers) th.join();
    }
    HSet out{params, {}};
    for (auto& block : results) {
        for (auto& m : block) out.members.push_back(std::move(m));
    }
    std::sort(out.members.begin(), out.members.end(), [](const HSetMember& a, const HSetMember& b) { return a.n < b.n; });
    out.members.erase(std::unique(out.members.begin(), out.members.end(),
                                  [](const HSetMember& a, const HSetMember& b) { return a.n == b.n; }),
                      out.members.end());
    return out;
}

// ---------------------------------------------------------------------------
// Single-integer membership
// ---------------------------------------------------------------------------

enum class MembershipCondition {
    PowerBound,    ///< p^nu_p(n) <= s
    ResidueBound,  ///< d + [s/p] >= p, only for p > s/c
};

struct MembershipPrimeCheck {
    std::uint64_t prime = 0;
    unsigned exponent = 0;
    bool power_ok = false;
    bool large = false;                ///< p > s/c
    std::optional<std::uint64_t> d;    ///< (n/p) mod p, large primes with exponent 1
    std::optional<bool> residue_ok;
    MembershipCondition decisive = MembershipCondition::PowerBound;
    bool passed = false;
};

struct MembershipResult {
    bool member = false;
    bool above_127 = false;
    std::vector<MembershipPrimeCheck> trace;
};

template <IntegerLike Int>
MembershipResult membership_test(const Int& n, const SieveParams& params) {
    const BigInt nb(n);
    if (nb < 1) throw InvalidArgument("membership_test requires n >= 1");
    MembershipResult out;
    out.above_127 = nb > 127;
    const Factorization f = factorize(nb);
    bool all_ok = true;
    for (const auto& e : f.entries()) {
        MembershipPrimeCheck c;
        c.prime = e.prime;
        c.exponent = e.exponent;
        c.large = params.is_large(e.prime);
        c.power_ok = boost::multiprecision::pow(BigInt(e.prime), e.exponent) <= params.s();
        c.passed = c.power_ok;
        c.decisive = MembershipCondition::PowerBound;
        if (c.power_ok && c.large) {
            c.d = static_cast<std::uint64_t>(BigInt((nb / e.prime) % e.prime));
            c.residue_ok = *c.d + params.s() / e.prime >= e.prime;
            c.passed = *c.residue_ok;
            c.decisive = MembershipCondition::ResidueBound;
        }
        all_ok = all_ok && c.passed;
        out.trace.push_back(c);
    }
    out.member = out.above_127 && all_ok;
    return out;
}

// ---------------------------------------------------------------------------
// Survivors of the linear-factor filter
// ---------------------------------------------------------------------------

struct SieveSurvivor {
    BigInt n;
    Factorization factorization;
    int part = 1;
    std::vector<Factor1PrimeCheck> trace;
};

struct SieveRun {
    HSet hset;
    std::vector<SieveSurvivor> survivors;  ///< ascending n
};

/// H_{s,c} followed by the linear-factor filter on every member; survivors
/// are the members where the filter is inconclusive.
inline SieveRun run_sieve(const SieveParams& params, unsigned jobs = 1) {
    SieveRun run{enumerate_h(params, jobs), {}};
    for (const auto& m : run.hset.members) {
        if (factor1_no_linear(m.n, params.s(), m.factorization).no_linear_factor()) continue;
        run.survivors.push_back({m.n, m.factorization, m.part, factor1_trace(m.n, params.s(), m.factorization)});
    }
    return run;
}

inline SieveRun run_sieve(std::uint64_t s, unsigned jobs = 1) { return run_sieve(SieveParams(s, c_schedule(s)), jobs); }

// ---------------------------------------------------------------------------
// Stability of H_{s,c} under s -> s+1
// ---------------------------------------------------------------------------

/// [s/c] = [(s+1)/c] and P(s+1) <= [s/c].
inline bool remark1_hypotheses(std::uint64_t s, const Ratio& c) {
    const SieveParams a(s, c), b(s + 1, c);
    if (a.floor_threshold() != b.floor_threshold()) return false;
    const auto largest = factorize(s + 1).largest_prime();
    return largest.value_or(1) <= a.floor_threshold();
}

/// True iff H_{s,c} and H_{s+1,c} are equal as sets.
inline bool remark1_equal(std::uint64_t s, const Ratio& c, unsigned jobs = 1) {
    return enumerate_h(SieveParams(s, c), jobs).values() == enumerate_h(SieveParams(s + 1, c), jobs).values();
}

}  // namespace glp
