#pragma once

// Prime, valuation and digit-sum arithmetic. Everything here is pure; the
// only shared state is the prime table, which is built once on first use.

#include <algorithm>
#include <compare>
#include <concepts>
#include <cstdint>
#include <limits>
#include <optional>
#include <ostream>
#include <string>
#include <type_traits>
#include <vector>

#include "glp/errors.hpp"
#include "glp/numeric.hpp"

namespace glp {

template <class T>
concept IntegerLike = std::integral<T> || std::same_as<T, BigInt>;

// ---------------------------------------------------------------------------
// Primality
// ---------------------------------------------------------------------------

namespace detail {

inline std::uint64_t mul_mod(std::uint64_t a, std::uint64_t b, std::uint64_t m) {
    return static_cast<std::uint64_t>(static_cast<unsigned __int128>(a) * b % m);
}

inline std::uint64_t pow_mod(std::uint64_t base, std::uint64_t exp, std::uint64_t m) {
    std::uint64_t result = 1 % m;
    base %= m;
    while (exp != 0) {
        if (exp & 1) result = mul_mod(result, base, m);
        base = mul_mod(base, base, m);
        exp >>= 1;
    }
    return result;
}

}  // namespace detail

/// Deterministic Miller-Rabin, exact for every 64-bit input.
inline bool is_prime(std::uint64_t n) {
    if (n < 2) return false;
    for (std::uint64_t q : {2ULL, 3ULL, 5ULL, 7ULL, 11ULL, 13ULL, 17ULL, 19ULL, 23ULL, 29ULL, 31ULL, 37ULL}) {
        if (n % q == 0) return n == q;
    }
    std::uint64_t d = n - 1;
    unsigned r = 0;
    while ((d & 1) == 0) {
        d >>= 1;
        ++r;
    }
    // Bases known to be sufficient for n < 2^64 (Sinclair's set).
    for (std::uint64_t a : {2ULL, 325ULL, 9375ULL, 28178ULL, 450775ULL, 9780504ULL, 1795265022ULL}) {
        std::uint64_t x = detail::pow_mod(a % n, d, n);
        if (x == 0 || x == 1 || x == n - 1) continue;
        bool composite = true;
        for (unsigned i = 1; i < r; ++i) {
            x = detail::mul_mod(x, x, n);
            if (x == n - 1) {
                composite = false;
                break;
            }
        }
        if (composite) return false;
    }
    return true;
}

inline void require_prime(std::uint64_t p) {
    if (!is_prime(p)) throw InvalidPrime(std::to_string(p) + " is not prime");
}

/// Immutable sieve of Eratosthenes, built on first use.
class PrimeTable {
public:
    static constexpr std::uint64_t kLimit = std::uint64_t{1} << 21;

    static const PrimeTable& instance() {
        static const PrimeTable table;
        return table;
    }

    const std::vector<std::uint32_t>& primes() const noexcept { return primes_; }
    std::uint64_t limit() const noexcept { return kLimit; }

private:
    PrimeTable() {
        std::vector<bool> composite(kLimit + 1, false);
        for (std::uint64_t i = 2; i <= kLimit; ++i) {
            if (composite[i]) continue;
            primes_.push_back(static_cast<std::uint32_t>(i));
            for (std::uint64_t j = i * i; j <= kLimit; j += i) composite[j] = true;
        }
    }

    std::vector<std::uint32_t> primes_;
};

/// All primes p with a < p <= b, ascending. Empty when a >= b.
inline std::vector<std::uint64_t> primes_in(std::int64_t a, std::int64_t b) {
    std::vector<std::uint64_t> out;
    if (b <= a || b < 2) return out;
    const auto& table = PrimeTable::instance();
    const auto& ps = table.primes();
    std::uint64_t lo = a < 1 ? 1 : static_cast<std::uint64_t>(a);
    std::uint64_t hi = static_cast<std::uint64_t>(b);
    auto it = std::upper_bound(ps.begin(), ps.end(), lo);
    for (; it != ps.end() && *it <= hi; ++it) out.push_back(*it);
    for (std::uint64_t q = std::max(lo, table.limit()) + 1; q <= hi && q != 0; ++q) {
        if (is_prime(q)) out.push_back(q);
    }
    return out;
}

/// The first `count` primes p with p > after.
inline std::vector<std::uint64_t> primes_after(std::uint64_t after, std::size_t count) {
    std::vector<std::uint64_t> out;
    out.reserve(count);
    for (std::uint64_t q = after + 1; out.size() < count; ++q) {
        if (is_prime(q)) out.push_back(q);
    }
    return out;
}

// ---------------------------------------------------------------------------
// Valuations
// ---------------------------------------------------------------------------

/// Exponent of a prime in an integer. The valuation of zero is Infinite,
/// and addition saturates there.
class Valuation {
public:
    constexpr explicit Valuation(std::uint64_t v) noexcept : value_(v), infinite_(false) {}

    static constexpr Valuation infinite() noexcept { return Valuation(); }

    constexpr bool is_infinite() const noexcept { return infinite_; }
    constexpr bool is_finite() const noexcept { return !infinite_; }

    std::uint64_t value() const {
        if (infinite_) throw InvalidArgument("value() of an infinite valuation");
        return value_;
    }

    friend constexpr Valuation operator+(Valuation a, Valuation b) noexcept {
        if (a.infinite_ || b.infinite_) return infinite();
        return Valuation(a.value_ + b.value_);
    }

    friend constexpr bool operator==(Valuation a, Valuation b) noexcept {
        return a.infinite_ == b.infinite_ && (a.infinite_ || a.value_ == b.value_);
    }

    friend constexpr std::strong_ordering operator<=>(Valuation a, Valuation b) noexcept {
        if (a.infinite_ || b.infinite_) return a.infinite_ <=> b.infinite_;
        return a.value_ <=> b.value_;
    }

    std::string to_string() const { return infinite_ ? "inf" : std::to_string(value_); }

    friend std::ostream& operator<<(std::ostream& os, Valuation v) { return os << v.to_string(); }

private:
    constexpr Valuation() noexcept : value_(0), infinite_(true) {}

    std::uint64_t value_;
    bool infinite_;
};

namespace detail {

template <IntegerLike Int>
Int magnitude(const Int& x) {
    if constexpr (std::is_same_v<Int, BigInt>) {
        return x < 0 ? Int(-x) : x;
    } else if constexpr (std::is_signed_v<Int>) {
        return x < 0 ? static_cast<Int>(-x) : x;
    } else {
        return x;
    }
}

template <IntegerLike Int>
void require_non_negative(const Int& x, const char* what) {
    if constexpr (std::is_same_v<Int, BigInt> || std::is_signed_v<Int>) {
        if (x < 0) throw InvalidArgument(std::string(what) + " must be non-negative");
    }
}

}  // namespace detail

/// Exact exponent of p in x; Infinite for x = 0.
template <IntegerLike Int>
Valuation nu_p(const Int& x, std::uint64_t p) {
    require_prime(p);
    if (x == 0) return Valuation::infinite();
    Int m = detail::magnitude(x);
    std::uint64_t v = 0;
    while (m % p == 0) {
        m /= p;
        ++v;
    }
    return Valuation(v);
}

/// Sum of the base-p digits of l.
template <IntegerLike Int>
std::uint64_t digit_sum(Int l, std::uint64_t p) {
    require_prime(p);
    detail::require_non_negative(l, "digit_sum argument");
    std::uint64_t sum = 0;
    while (l != 0) {
        sum += static_cast<std::uint64_t>(Int(l % p));
        l /= p;
    }
    return sum;
}

/// nu_p(l!) by Legendre's digit-sum formula (l - sigma_p(l)) / (p - 1).
template <IntegerLike Int>
Int factorial_valuation(const Int& l, std::uint64_t p) {
    const std::uint64_t sigma = digit_sum(l, p);
    return Int((l - sigma) / (p - 1));
}

/// nu_p(C(m, t)) = (sigma(t) + sigma(m - t) - sigma(m)) / (p - 1).
template <IntegerLike Int>
std::uint64_t binomial_valuation(const Int& m, const Int& t, std::uint64_t p) {
    require_prime(p);
    detail::require_non_negative(t, "binomial lower index");
    if (t > m) throw InvalidArgument("binomial_valuation requires t <= m");
    const std::uint64_t total = digit_sum(t, p) + digit_sum(Int(m - t), p);
    return (total - digit_sum(m, p)) / (p - 1);
}

// ---------------------------------------------------------------------------
// Factorization
// ---------------------------------------------------------------------------

struct PrimePower {
    std::uint64_t prime = 0;
    unsigned exponent = 0;

    friend bool operator==(const PrimePower&, const PrimePower&) = default;
};

/// Prime factorization with strictly increasing primes and positive
/// exponents. The empty factorization represents 1.
class Factorization {
public:
    Factorization() = default;

    explicit Factorization(std::vector<PrimePower> entries) : entries_(std::move(entries)) {
        for (std::size_t i = 0; i < entries_.size(); ++i) {
            require_prime(entries_[i].prime);
            if (entries_[i].exponent == 0) throw InvalidArgument("factorization exponent must be >= 1");
            if (i > 0 && entries_[i - 1].prime >= entries_[i].prime) {
                throw InvalidArgument("factorization primes must be strictly increasing");
            }
        }
    }

    const std::vector<PrimePower>& entries() const& noexcept { return entries_; }
    std::vector<PrimePower> entries() && noexcept { return std::move(entries_); }
    bool empty() const noexcept { return entries_.empty(); }
    std::size_t size() const noexcept { return entries_.size(); }

    /// P(n): the largest prime factor, absent for n = 1.
    std::optional<std::uint64_t> largest_prime() const {
        if (entries_.empty()) return std::nullopt;
        return entries_.back().prime;
    }

    unsigned exponent_of(std::uint64_t p) const {
        for (const auto& e : entries_) {
            if (e.prime == p) return e.exponent;
        }
        return 0;
    }

    BigInt value() const {
        BigInt v = 1;
        for (const auto& e : entries_) v *= boost::multiprecision::pow(BigInt(e.prime), e.exponent);
        return v;
    }

    /// "2^4·17"; "1" for the empty product.
    std::string to_string() const {
        if (entries_.empty()) return "1";
        std::string out;
        for (const auto& e : entries_) {
            if (!out.empty()) out += "·";
            out += std::to_string(e.prime);
            if (e.exponent > 1) out += "^" + std::to_string(e.exponent);
        }
        return out;
    }

    friend bool operator==(const Factorization&, const Factorization&) = default;

private:
    std::vector<PrimePower> entries_;
};

inline constexpr std::uint64_t kDefaultTrialBound = 1'000'000;

/// Complete factorization by trial division up to `bound`. A cofactor left
/// over after trial division is accepted only if it is provably prime.
template <IntegerLike Int>
Factorization factorize(const Int& x, std::uint64_t bound = kDefaultTrialBound) {
    if (x < 1) throw InvalidArgument("factorize requires x >= 1");
    bound = std::min(bound, PrimeTable::kLimit);
    Int rest = x;
    std::vector<PrimePower> out;
    for (std::uint32_t q : PrimeTable::instance().primes()) {
        if (q > bound) break;
        if (Int(q) * Int(q) > rest) break;
        if (rest % q != 0) continue;
        unsigned e = 0;
        do {
            rest /= q;
            ++e;
        } while (rest % q == 0);
        out.push_back({q, e});
    }
    if (rest != 1) {
        const BigInt r(rest);
        const bool fits = r <= BigInt(std::numeric_limits<std::uint64_t>::max());
        const bool below_square = fits && r <= BigInt(bound) * bound;
        if (!fits || !(below_square || is_prime(static_cast<std::uint64_t>(rest)))) {
            throw FactorizationIncomplete("cofactor of " + BigInt(x).str() + " exceeds the trial-division bound");
        }
        out.push_back({static_cast<std::uint64_t>(rest), 1});
    }
    return Factorization(std::move(out));
}

}  // namespace glp
