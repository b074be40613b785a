#pragma once

// Exact construction of the generalized Laguerre family at alpha = -n-s-1,
// its monic integer normalization g1 = n!·g, the multiplier variant G1, the
// general rational family L_n^(alpha), and Schur's discriminant product.

#include <cstdint>
#include <initializer_list>
#include <string>
#include <vector>

#include "glp/errors.hpp"
#include "glp/numeric.hpp"

namespace glp {

/// Dense integer polynomial, coefficient index = power of x. The zero
/// polynomial is not representable: the leading coefficient is never zero.
class IntegerPolynomial {
public:
    explicit IntegerPolynomial(std::vector<BigInt> coefficients) : coeffs_(std::move(coefficients)) {
        if (coeffs_.empty() || coeffs_.back() == 0) {
            throw InvalidPolynomial("leading coefficient must be nonzero");
        }
    }

    IntegerPolynomial(std::initializer_list<long long> coefficients)
        : IntegerPolynomial(std::vector<BigInt>(coefficients.begin(), coefficients.end())) {}

    std::size_t degree() const noexcept { return coeffs_.size() - 1; }
    const BigInt& operator[](std::size_t j) const { return coeffs_.at(j); }
    const BigInt& leading() const noexcept { return coeffs_.back(); }
    const BigInt& constant() const noexcept { return coeffs_.front(); }
    bool is_monic() const noexcept { return coeffs_.back() == 1; }
    const std::vector<BigInt>& coefficients() const noexcept { return coeffs_; }

    /// Human-readable, highest power first: "x^2 + 20*x + 110".
    std::string to_string() const {
        std::string out;
        for (std::size_t j = coeffs_.size(); j-- > 0;) {
            const BigInt& c = coeffs_[j];
            if (c == 0) continue;
            BigInt mag = c < 0 ? BigInt(-c) : c;
            if (out.empty()) {
                if (c < 0) out += "-";
            } else {
                out += c < 0 ? " - " : " + ";
            }
            const bool show_coeff = j == 0 || mag != 1;
            if (show_coeff) out += mag.str();
            if (j > 0) {
                if (show_coeff) out += "*";
                out += "x";
                if (j > 1) out += "^" + std::to_string(j);
            }
        }
        return out;
    }

    friend bool operator==(const IntegerPolynomial&, const IntegerPolynomial&) = default;

private:
    std::vector<BigInt> coeffs_;
};

/// One member (n, s) of the family; alpha = -n - s - 1.
class GlpInstance {
public:
    GlpInstance(std::uint64_t n, std::uint64_t s) : n_(n), s_(s) {
        if (n == 0) throw InvalidArgument("degree n must be >= 1");
    }

    std::uint64_t n() const noexcept { return n_; }
    std::uint64_t s() const noexcept { return s_; }
    BigRational alpha() const { return BigRational(-BigInt(n_) - BigInt(s_) - 1); }

    friend bool operator==(const GlpInstance&, const GlpInstance&) = default;

private:
    std::uint64_t n_;
    std::uint64_t s_;
};

/// Integer multipliers a_0..a_n with |a_0| = |a_n| = 1.
class MultiplierVector {
public:
    explicit MultiplierVector(std::vector<BigInt> a) : a_(std::move(a)) {
        if (a_.size() < 2) throw InvalidMultipliers("multiplier vector needs at least a_0 and a_n");
        auto unit = [](const BigInt& x) { return x == 1 || x == -1; };
        if (!unit(a_.front()) || !unit(a_.back())) throw InvalidMultipliers("|a_0| and |a_n| must equal 1");
    }

    MultiplierVector(std::initializer_list<long long> a)
        : MultiplierVector(std::vector<BigInt>(a.begin(), a.end())) {}

    std::size_t size() const noexcept { return a_.size(); }
    const BigInt& operator[](std::size_t j) const { return a_.at(j); }

private:
    std::vector<BigInt> a_;
};

namespace detail {

inline BigInt binomial(std::uint64_t m, std::uint64_t t) {
    if (t > m) return 0;
    if (t > m - t) t = m - t;
    BigInt r = 1;
    for (std::uint64_t i = 1; i <= t; ++i) {
        r *= m - t + i;
        r /= i;
    }
    return r;
}

}  // namespace detail

/// b_j = C(n+s-j, n-j).
inline BigInt b_coefficient(const GlpInstance& inst, std::uint64_t j) {
    if (j > inst.n()) throw InvalidArgument("index j must satisfy 0 <= j <= n");
    return detail::binomial(inst.n() + inst.s() - j, inst.n() - j);
}

/// g1(x) = n!·Σ b_j x^j / j!, monic of degree n.
///
/// Built top-down with c_n = 1 and c_j = c_{j+1}·(j+1)·(n+s-j)/(n-j), so
/// n! itself is never formed. The division is exact at every step since
/// c_j = (n!/j!)·b_j is an integer.
inline IntegerPolynomial g1_polynomial(const GlpInstance& inst) {
    const std::uint64_t n = inst.n(), s = inst.s();
    std::vector<BigInt> c(n + 1);
    c[n] = 1;
    for (std::uint64_t j = n; j-- > 0;) {
        c[j] = c[j + 1] * (j + 1);
        c[j] *= n + s - j;
        c[j] /= n - j;
    }
    return IntegerPolynomial(std::move(c));
}

/// G1(x) = n!·Σ a_j b_j x^j / j!.
inline IntegerPolynomial G1_polynomial(const GlpInstance& inst, const MultiplierVector& a) {
    if (a.size() != inst.n() + 1) throw InvalidMultipliers("multiplier vector must have length n + 1");
    std::vector<BigInt> c = g1_polynomial(inst).coefficients();
    for (std::size_t j = 0; j < c.size(); ++j) c[j] *= a[j];
    return IntegerPolynomial(std::move(c));
}

/// Coefficients of L_n^(alpha)(x) as exact rationals, ascending powers:
/// the x^j coefficient is (n+alpha)(n-1+alpha)...(j+1+alpha) / (j!(n-j)!) · (-1)^j.
inline std::vector<BigRational> glp_general(std::uint64_t n, const BigRational& alpha) {
    if (n == 0) throw InvalidArgument("degree n must be >= 1");
    std::vector<BigRational> out(n + 1);
    // Rising product from the top: P_n = 1, P_j = P_{j+1}·(j+1+alpha).
    BigRational rising = 1;
    std::vector<BigInt> factorial(n + 1);
    factorial[0] = 1;
    for (std::uint64_t i = 1; i <= n; ++i) factorial[i] = factorial[i - 1] * i;
    for (std::uint64_t j = n + 1; j-- > 0;) {
        if (j < n) rising *= BigRational(j + 1) + alpha;
        BigRational term = rising / BigRational(factorial[j] * factorial[n - j]);
        out[j] = (j % 2 == 0) ? term : BigRational(-term);
    }
    return out;
}

/// Schur's discriminant of n!·L_n^(alpha): the product of j^j (alpha+j)^(j-1) over 1 <= j <= n.
inline BigRational discriminant_glp(std::uint64_t n, const BigRational& alpha) {
    if (n == 0) throw InvalidArgument("degree n must be >= 1");
    BigRational d = 1;
    for (std::uint64_t j = 1; j <= n; ++j) {
        d *= BigRational(boost::multiprecision::pow(BigInt(j), static_cast<unsigned>(j)));
        BigRational shifted = alpha + BigRational(j);
        for (std::uint64_t e = 1; e < j; ++e) d *= shifted;
    }
    return d;
}

}  // namespace glp
