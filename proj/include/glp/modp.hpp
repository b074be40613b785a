#pragma once

// Polynomials over the prime field F_p (p < 2^32), with the pieces the
// certifier needs: reduction, root scans, Rabin's irreducibility test and
// distinct-degree factorization driven by the Frobenius (Berlekamp) matrix.

#include <algorithm>
#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "glp/errors.hpp"
#include "glp/numeric.hpp"
#include "glp/polynomial.hpp"
#include "glp/valuation.hpp"

namespace glp {

/// Polynomial over F_p. Coefficients are reduced and trailing zeros are
/// trimmed, so the zero polynomial has no coefficients and degree -1.
class ModPolynomial {
public:
    ModPolynomial(std::uint64_t p, std::vector<std::uint64_t> coefficients) : p_(p), c_(std::move(coefficients)) {
        if (p >= (std::uint64_t{1} << 32)) throw InvalidArgument("modulus must be below 2^32");
        for (auto& x : c_) x %= p_;
        trim();
    }

    static ModPolynomial monomial(std::uint64_t p, std::size_t k, std::uint64_t coeff = 1) {
        std::vector<std::uint64_t> c(k + 1, 0);
        c[k] = coeff;
        return ModPolynomial(p, std::move(c));
    }

    std::uint64_t modulus() const noexcept { return p_; }
    std::int64_t degree() const noexcept { return static_cast<std::int64_t>(c_.size()) - 1; }
    bool is_zero() const noexcept { return c_.empty(); }
    const std::vector<std::uint64_t>& coefficients() const noexcept { return c_; }
    std::uint64_t operator[](std::size_t j) const noexcept { return j < c_.size() ? c_[j] : 0; }
    std::uint64_t leading() const noexcept { return c_.empty() ? 0 : c_.back(); }

    std::uint64_t evaluate(std::uint64_t x) const noexcept {
        std::uint64_t acc = 0;
        for (std::size_t j = c_.size(); j-- > 0;) acc = (acc * x + c_[j]) % p_;
        return acc;
    }

    /// "x^2 + 6*x + 5 (mod 7)"
    std::string to_string() const {
        if (c_.empty()) return "0 (mod " + std::to_string(p_) + ")";
        std::string out;
        for (std::size_t j = c_.size(); j-- > 0;) {
            if (c_[j] == 0) continue;
            if (!out.empty()) out += " + ";
            if (j == 0 || c_[j] != 1) out += std::to_string(c_[j]) + (j > 0 ? "*" : "");
            if (j > 0) out += j > 1 ? "x^" + std::to_string(j) : "x";
        }
        return out + " (mod " + std::to_string(p_) + ")";
    }

    friend bool operator==(const ModPolynomial&, const ModPolynomial&) = default;

private:
    friend class ModArith;

    void trim() {
        while (!c_.empty() && c_.back() == 0) c_.pop_back();
    }

    std::uint64_t p_;
    std::vector<std::uint64_t> c_;
};

/// Coefficientwise reduction of an integer polynomial.
inline ModPolynomial reduce_mod_p(const IntegerPolynomial& f, std::uint64_t p) {
    require_prime(p);
    std::vector<std::uint64_t> c(f.degree() + 1);
    for (std::size_t j = 0; j <= f.degree(); ++j) {
        BigInt r = f[j] % p;
        if (r < 0) r += p;
        c[j] = static_cast<std::uint64_t>(r);
    }
    return ModPolynomial(p, std::move(c));
}

/// Ring operations on ModPolynomial. All operands must share one modulus.
class ModArith {
public:
    explicit ModArith(std::uint64_t p) : p_(p) {}

    std::uint64_t inverse(std::uint64_t a) const {
        if (a % p_ == 0) throw InvalidArgument("zero has no inverse");
        return detail::pow_mod(a, p_ - 2, p_);
    }

    ModPolynomial sub(const ModPolynomial& a, const ModPolynomial& b) const {
        std::vector<std::uint64_t> c(std::max(a.c_.size(), b.c_.size()), 0);
        for (std::size_t i = 0; i < c.size(); ++i) c[i] = (a[i] + p_ - b[i]) % p_;
        return ModPolynomial(p_, std::move(c));
    }

    ModPolynomial mul(const ModPolynomial& a, const ModPolynomial& b) const {
        if (a.is_zero() || b.is_zero()) return ModPolynomial(p_, {});
        std::vector<std::uint64_t> c(a.c_.size() + b.c_.size() - 1, 0);
        for (std::size_t i = 0; i < a.c_.size(); ++i) {
            if (a.c_[i] == 0) continue;
            for (std::size_t j = 0; j < b.c_.size(); ++j) c[i + j] = (c[i + j] + a.c_[i] * b.c_[j]) % p_;
        }
        return ModPolynomial(p_, std::move(c));
    }

    /// Quotient and remainder of a by a nonzero b.
    std::pair<ModPolynomial, ModPolynomial> divmod(const ModPolynomial& a, const ModPolynomial& b) const {
        if (b.is_zero()) throw InvalidArgument("division by the zero polynomial");
        std::vector<std::uint64_t> r = a.c_;
        const std::size_t db = b.c_.size() - 1;
        if (r.size() <= db) return {ModPolynomial(p_, {}), a};
        std::vector<std::uint64_t> q(r.size() - db, 0);
        const std::uint64_t inv = inverse(b.c_.back());
        for (std::size_t k = r.size(); k-- > db;) {
            const std::uint64_t coeff = r[k] * inv % p_;
            q[k - db] = coeff;
            if (coeff == 0) continue;
            for (std::size_t j = 0; j <= db; ++j) {
                r[k - db + j] = (r[k - db + j] + p_ - coeff * b.c_[j] % p_) % p_;
            }
        }
        r.resize(db);
        return {ModPolynomial(p_, std::move(q)), ModPolynomial(p_, std::move(r))};
    }

    ModPolynomial mod(const ModPolynomial& a, const ModPolynomial& b) const { return divmod(a, b).second; }

    ModPolynomial monic(const ModPolynomial& a) const {
        if (a.is_zero()) return a;
        const std::uint64_t inv = inverse(a.leading());
        std::vector<std::uint64_t> c = a.c_;
        for (auto& x : c) x = x * inv % p_;
        return ModPolynomial(p_, std::move(c));
    }

    /// Monic greatest common divisor.
    ModPolynomial gcd(ModPolynomial a, ModPolynomial b) const {
        while (!b.is_zero()) {
            ModPolynomial r = mod(a, b);
            a = std::move(b);
            b = std::move(r);
        }
        return monic(a);
    }

    ModPolynomial derivative(const ModPolynomial& a) const {
        if (a.c_.size() <= 1) return ModPolynomial(p_, {});
        std::vector<std::uint64_t> c(a.c_.size() - 1);
        for (std::size_t j = 1; j < a.c_.size(); ++j) c[j - 1] = a.c_[j] * (j % p_) % p_;
        return ModPolynomial(p_, std::move(c));
    }

    /// base^e mod m by repeated squaring.
    ModPolynomial pow_mod(const ModPolynomial& base, std::uint64_t e, const ModPolynomial& m) const {
        ModPolynomial result = mod(ModPolynomial(p_, {1}), m);
        ModPolynomial b = mod(base, m);
        while (e != 0) {
            if (e & 1) result = mod(mul(result, b), m);
            e >>= 1;
            if (e != 0) b = mod(mul(b, b), m);
        }
        return result;
    }

private:
    std::uint64_t p_;
};

/// Frobenius map h -> h^p on F_p[x]/(f), stored as the matrix whose k-th
/// row is x^(kp) mod f. Applying it costs deg(f)^2.
class FrobeniusMap {
public:
    explicit FrobeniusMap(const ModPolynomial& f) : f_(f), arith_(f.modulus()) {
        const auto m = static_cast<std::size_t>(f.degree());
        const ModPolynomial x = ModPolynomial::monomial(f.modulus(), 1);
        const ModPolynomial xp = arith_.pow_mod(x, f.modulus(), f);
        rows_.reserve(m);
        ModPolynomial row = arith_.mod(ModPolynomial(f.modulus(), {1}), f);
        for (std::size_t k = 0; k < m; ++k) {
            rows_.push_back(row.coefficients());
            rows_.back().resize(m, 0);
            if (k + 1 < m) row = arith_.mod(arith_.mul(row, xp), f);
        }
    }

    ModPolynomial apply(const ModPolynomial& h) const {
        const std::uint64_t p = f_.modulus();
        const std::size_t m = rows_.size();
        std::vector<std::uint64_t> acc(m, 0);
        for (std::size_t k = 0; k < m; ++k) {
            const std::uint64_t hk = h[k];
            if (hk == 0) continue;
            const auto& row = rows_[k];
            for (std::size_t j = 0; j < m; ++j) acc[j] = (acc[j] + hk * row[j]) % p;
        }
        return ModPolynomial(p, std::move(acc));
    }

private:
    ModPolynomial f_;
    ModArith arith_;
    std::vector<std::vector<std::uint64_t>> rows_;
};

/// True iff the monic f has no root in F_p (full residue scan).
inline bool no_root_mod_p(const ModPolynomial& f) {
    for (std::uint64_t x = 0; x < f.modulus(); ++x) {
        if (f.evaluate(x) == 0) return false;
    }
    return true;
}

inline bool no_root_mod_p(const IntegerPolynomial& f, std::uint64_t p) {
    if (!f.is_monic()) throw InvalidPolynomial("no_root_mod_p requires a monic polynomial");
    return no_root_mod_p(reduce_mod_p(f, p));
}

inline constexpr std::size_t kDefaultIrreducibilityDegreeBound = 600;

/// Rabin's test on the reduction of a monic f: x^(p^m) = x mod f and
/// gcd(x^(p^(m/q)) - x, f) = 1 for every prime q dividing m = deg f.
inline bool mod_p_irreducible(const IntegerPolynomial& f, std::uint64_t p,
                              std::size_t degree_bound = kDefaultIrreducibilityDegreeBound) {
    if (!f.is_monic()) throw InvalidPolynomial("mod_p_irreducible requires a monic polynomial");
    if (f.degree() > degree_bound) {
        throw DegreeBoundExceeded("degree " + std::to_string(f.degree()) + " exceeds bound " +
                                  std::to_string(degree_bound));
    }
    const ModPolynomial fp = reduce_mod_p(f, p);
    const std::size_t m = f.degree();
    if (m == 1) return true;

    std::vector<std::size_t> checkpoints;
    for (const auto& pe : factorize(static_cast<std::uint64_t>(m)).entries()) checkpoints.push_back(m / pe.prime);

    const ModArith arith(p);
    const FrobeniusMap frob(fp);
    const ModPolynomial x = ModPolynomial::monomial(p, 1);
    ModPolynomial h = arith.mod(x, fp);
    for (std::size_t i = 1; i <= m; ++i) {
        h = frob.apply(h);
        if (std::find(checkpoints.begin(), checkpoints.end(), i) != checkpoints.end()) {
            if (arith.gcd(fp, arith.sub(h, x)).degree() != 0) return false;
        }
    }
    return arith.sub(h, x).is_zero();
}

/// Degrees of the irreducible factors of f mod p (ascending, with
/// multiplicity) by distinct-degree factorization. Empty when f mod p is not
/// squarefree or drops degree, since the pattern is then not a valid
/// factor-degree constraint.
inline std::optional<std::vector<std::size_t>> factor_degrees_mod_p(const IntegerPolynomial& f, std::uint64_t p) {
    const ModPolynomial fp = reduce_mod_p(f, p);
    if (fp.degree() != static_cast<std::int64_t>(f.degree())) return std::nullopt;
    const ModArith arith(p);
    const ModPolynomial fm = arith.monic(fp);
    if (fm.degree() == 0) return std::vector<std::size_t>{};
    if (arith.gcd(fm, arith.derivative(fm)).degree() != 0) return std::nullopt;

    std::vector<std::size_t> degrees;
    const FrobeniusMap frob(fm);
    const ModPolynomial x = ModPolynomial::monomial(p, 1);
    ModPolynomial rest = fm;
    ModPolynomial h = arith.mod(x, fm);
    for (std::size_t d = 1; rest.degree() >= static_cast<std::int64_t>(2 * d); ++d) {
        h = frob.apply(h);
        const ModPolynomial g = arith.gcd(rest, arith.mod(arith.sub(h, x), rest));
        if (g.degree() > 0) {
            const auto count = static_cast<std::size_t>(g.degree()) / d;
            degrees.insert(degrees.end(), count, d);
            rest = arith.divmod(rest, g).first;
        }
    }
    if (rest.degree() > 0) degrees.push_back(static_cast<std::size_t>(rest.degree()));
    std::sort(degrees.begin(), degrees.end());
    return degrees;
}

/// Every degree a factor could have given the factor degrees mod p:
/// the subset sums of the pattern.
inline std::vector<bool> achievable_degrees(const std::vector<std::size_t>& pattern) {
    std::size_t total = 0;
    for (auto d : pattern) total += d;
    std::vector<bool> reach(total + 1, false);
    reach[0] = true;
    for (auto d : pattern) {
        for (std::size_t t = total; t >= d; --t) {
            if (reach[t - d]) reach[t] = true;
        }
    }
    return reach;
}

}  // namespace glp
