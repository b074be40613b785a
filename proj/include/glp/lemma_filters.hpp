#pragma once

// Arithmetic filters that rule out factors of g1(x, n, s), mostly linear
// ones, from the base-p structure of n and s alone. None of them builds the
// polynomial.

#include <algorithm>
#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "glp/errors.hpp"
#include "glp/numeric.hpp"
#include "glp/valuation.hpp"

namespace glp {

enum class LinearCase {
    UZero,     ///< nu_p(C(n+s, s)) = 0
    MaxLtOne,  ///< u > 0, p > 2 and max{(u+1)/p, (nu_p(n+s-z0) - nu_p(n))/(z0+1)} < 1,
               ///< z0 = (n+s) mod p
};

inline std::string to_string(LinearCase c) { return c == LinearCase::UZero ? "U_ZERO" : "MAX_LT_ONE"; }

struct LinearWitness {
    std::uint64_t prime = 0;
    LinearCase kind = LinearCase::UZero;
    std::uint64_t u = 0;
    std::optional<std::uint64_t> z0;

    friend bool operator==(const LinearWitness&, const LinearWitness&) = default;
};

/// Result of the linear-factor filter. The verdict is NoLinearFactor exactly
/// when a witness is present.
struct LinearFilterOutcome {
    std::optional<LinearWitness> witness;

    bool no_linear_factor() const noexcept { return witness.has_value(); }
    std::string verdict() const { return witness ? "NoLinearFactor" : "Inconclusive"; }
};

/// Everything the linear-factor filter computes at one prime p | n(s+1).
struct Factor1PrimeCheck {
    std::uint64_t prime = 0;
    std::uint64_t u = 0;                  ///< nu_p(C(n+s, s))
    std::optional<std::uint64_t> z0;      ///< (n+s) mod p in [0, p), set when u > 0
    std::optional<Valuation> nu_shifted;  ///< nu_p(n+s-z0)
    std::uint64_t nu_n = 0;               ///< nu_p(n)
    std::optional<Ratio> ratio_u;         ///< (u+1)/p
    std::optional<Ratio> ratio_shift;     ///< (nu_p(n+s-z0) - nu_p(n))/(z0+1), absent if infinite
    std::optional<LinearCase> passes;     ///< the case that holds, case (i) first
};

namespace detail {

inline std::vector<std::uint64_t> primes_of_n_times_s_plus_1(const Factorization& n_factors, std::uint64_t s) {
    std::vector<std::uint64_t> ps;
    for (const auto& e : n_factors.entries()) ps.push_back(e.prime);
    for (const auto& e : factorize(s + 1).entries()) ps.push_back(e.prime);
    std::sort(ps.begin(), ps.end());
    ps.erase(std::unique(ps.begin(), ps.end()), ps.end());
    return ps;
}

}  // namespace detail

/// Evaluates both cases of the linear-factor criterion at one prime. The
/// prime is expected to divide n(s+1); the arithmetic does not depend on it.
template <IntegerLike Int>
Factor1PrimeCheck factor1_check_prime(const Int& n, std::uint64_t s, std::uint64_t p) {
    require_prime(p);
    const BigInt nb(n);
    const BigInt total = nb + s;
    Factor1PrimeCheck c;
    c.prime = p;
    c.u = binomial_valuation(total, BigInt(s), p);
    c.nu_n = nu_p(nb, p).value();
    if (c.u == 0) {
        c.passes = LinearCase::UZero;
        return c;
    }
    // z0 is taken in [0, p): when p | n+s the first falling factor n+s is
    // itself the multiple of p and the shift ratio becomes nu_p(n+s) - nu_p(n).
    const auto z0 = static_cast<std::uint64_t>(BigInt(total % p));
    c.z0 = z0;
    c.nu_shifted = nu_p(BigInt(total - z0), p);
    c.ratio_u = Ratio(static_cast<std::int64_t>(c.u + 1), static_cast<std::int64_t>(p));
    if (c.nu_shifted->is_finite()) {
        const auto num = static_cast<std::int64_t>(c.nu_shifted->value()) - static_cast<std::int64_t>(c.nu_n);
        c.ratio_shift = Ratio(num, static_cast<std::int64_t>(z0 + 1));
    }
    if (p > 2 && c.ratio_u && c.ratio_shift) {
        const Ratio one(1);
        if (std::max(*c.ratio_u, *c.ratio_shift) < one) c.passes = LinearCase::MaxLtOne;
    }
    return c;
}

/// Full per-prime evaluation over the primes of n(s+1), ascending.
template <IntegerLike Int>
std::vector<Factor1PrimeCheck> factor1_trace(const Int& n, std::uint64_t s, const Factorization& n_factors) {
    std::vector<Factor1PrimeCheck> out;
    for (std::uint64_t p : detail::primes_of_n_times_s_plus_1(n_factors, s)) {
        out.push_back(factor1_check_prime(n, s, p));
    }
    return out;
}

/// The linear-factor filter: the smallest prime p | n(s+1) at which case (i)
/// or case (ii) holds certifies that g1 has no factor of degree 1.
template <IntegerLike Int>
LinearFilterOutcome factor1_no_linear(const Int& n, std::uint64_t s, const Factorization& n_factors) {
    if (n < 1) throw InvalidArgument("n must be >= 1");
    for (std::uint64_t p : detail::primes_of_n_times_s_plus_1(n_factors, s)) {
        const Factor1PrimeCheck c = factor1_check_prime(n, s, p);
        if (c.passes) return {LinearWitness{p, *c.passes, c.u, c.z0}};
    }
    return {};
}

template <IntegerLike Int>
LinearFilterOutcome factor1_no_linear(const Int& n, std::uint64_t s) {
    if (n < 1) throw InvalidArgument("n must be >= 1");
    return factor1_no_linear(n, s, factorize(n));
}

/// Shorey-Tiwari, contrapositive form for g: the smallest prime p > k with
/// p | n(n-1)...(n-k+1) and p not dividing C(n+s, s). Such a p rules out a
/// factor of degree k.
inline std::optional<std::uint64_t> shorey_tiwari_excludes(std::uint64_t n, std::uint64_t s, std::uint64_t k) {
    if (k < 1 || 2 * k > n) throw InvalidArgument("shorey_tiwari_excludes requires 1 <= k <= n/2");
    std::vector<std::uint64_t> candidates;
    for (std::uint64_t i = 0; i < k; ++i) {
        for (const auto& e : factorize(n - i).entries()) {
            if (e.prime > k) candidates.push_back(e.prime);
        }
    }
    std::sort(candidates.begin(), candidates.end());
    candidates.erase(std::unique(candidates.begin(), candidates.end()), candidates.end());
    for (std::uint64_t p : candidates) {
        if (binomial_valuation(n + s, s, p) == 0) return p;
    }
    return std::nullopt;
}

/// Quantities behind the congruence condition d + [s/p] >= p, with n = pD,
/// s = p·s1 + s0 and d = D mod p.
struct Lemma6Details {
    std::uint64_t prime = 0;
    std::uint64_t d = 0;
    std::uint64_t s1 = 0;
    std::uint64_t s0 = 0;
    bool holds = false;
};

template <IntegerLike Int>
Lemma6Details lemma6_details(const Int& n, std::uint64_t s, std::uint64_t p) {
    require_prime(p);
    const BigInt nb(n);
    if (nb < 1 || nb % p != 0) throw PreconditionViolated("lemma6 requires p | n");
    if (nu_p(nb, p).value() != 1) throw PreconditionViolated("lemma6 requires nu_p(n) = 1");
    if (BigInt(s) >= BigInt(p) * p) throw PreconditionViolated("lemma6 requires s < p^2");
    Lemma6Details out;
    out.prime = p;
    out.d = static_cast<std::uint64_t>(BigInt((nb / p) % p));
    out.s1 = s / p;
    out.s0 = s % p;
    out.holds = out.d + out.s1 >= p;
    return out;
}

/// d + [s/p] >= p where d = (n/p) mod p. False means g1 is not a linear
/// factor times an irreducible polynomial.
template <IntegerLike Int>
bool lemma6_condition(const Int& n, std::uint64_t s, std::uint64_t p) {
    return lemma6_details(n, s, p).holds;
}

struct NPartition {
    std::uint64_t n0 = 1;  ///< largest divisor of n coprime to C(n+s, s)
    std::uint64_t n1 = 1;

    friend bool operator==(const NPartition&, const NPartition&) = default;
};

inline NPartition n_partition(std::uint64_t n, std::uint64_t s) {
    if (n < 1) throw InvalidArgument("n must be >= 1");
    NPartition out;
    for (const auto& e : factorize(n).entries()) {
        std::uint64_t power = 1;
        for (unsigned i = 0; i < e.exponent; ++i) power *= e.prime;
        if (binomial_valuation(n + s, s, e.prime) > 0) {
            out.n1 *= power;
        } else {
            out.n0 *= power;
        }
    }
    return out;
}

}  // namespace glp
