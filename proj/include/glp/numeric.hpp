#pragma once

#include <cstdint>
#include <string>

#include <boost/multiprecision/cpp_int.hpp>
#include <boost/rational.hpp>

namespace glp {

using BigInt = boost::multiprecision::cpp_int;
using BigRational = boost::multiprecision::cpp_rational;

/// Small exact rational. Used for slopes and sieve thresholds, whose
/// numerators and denominators stay far below 2^31.
using Ratio = boost::rational<std::int64_t>;

inline std::string to_string(const BigInt& x) { return x.str(); }

inline std::string to_string(const BigRational& q) {
    using boost::multiprecision::denominator;
    using boost::multiprecision::numerator;
    if (denominator(q) == 1) return numerator(q).str();
    return numerator(q).str() + "/" + denominator(q).str();
}

inline std::string to_string(const Ratio& q) {
    if (q.denominator() == 1) return std::to_string(q.numerator());
    return std::to_string(q.numerator()) + "/" + std::to_string(q.denominator());
}

/// Floor of a rational with positive denominator.
inline std::int64_t floor(const Ratio& q) {
    std::int64_t n = q.numerator(), d = q.denominator();
    std::int64_t f = n / d;
    if ((n % d != 0) && (n < 0)) --f;
    return f;
}

}  // namespace glp
