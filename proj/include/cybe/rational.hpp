// Exact rational scalars: arbitrary-precision fractions backed by GMP,
// always stored canonically (positive denominator, lowest terms).
#pragma once

#include <boost/multiprecision/gmp.hpp>
#include <boost/multiprecision/eigen.hpp>

#include <stdexcept>
#include <string>

namespace cybe {

using Rational = boost::multiprecision::mpq_rational;
using Integer = boost::multiprecision::mpz_int;

inline Rational rat(long num, long den = 1) { return Rational(num, den); }

inline bool is_zero(const Rational& x) { return x.is_zero(); }

inline bool is_integer(const Rational& x) { return denominator(x) == 1; }

/// Exact conversion to long; throws if the value is not an integer or too big.
inline long to_long(const Rational& x) {
    if (!is_integer(x)) throw std::domain_error("rational is not an integer");
    return numerator(x).convert_to<long>();
}

/// Canonical form "p/q" ("p" when q = 1, leading '-' for negatives).
inline std::string to_string(const Rational& x) { return x.str(); }

/// Parses "p" or "p/q"; the result is canonicalized (GMP's string assign is not).
inline Rational parse_rational(const std::string& s) {
    if (s.empty()) throw std::invalid_argument("empty rational literal");
    Rational x;
    try {
        x.assign(s);
    } catch (const std::exception&) {
        throw std::invalid_argument("bad rational literal: " + s);
    }
    if (denominator(x) == 0) throw std::invalid_argument("bad rational literal: " + s);
    mpq_canonicalize(x.backend().data());
    return x;
}

/// p mod q reduced into [0, q-1].
inline long mod_floor(long p, long q) {
    long r = p % q;
    return r < 0 ? r + q : r;
}

inline long floor_div(long a, long b) { return (a - mod_floor(a, b)) / b; }

inline Rational factorial(long k) {
    Rational f = 1;
    for (long j = 2; j <= k; ++j) f *= j;
    return f;
}

inline Rational binomial(long n, long k) {
    if (k < 0 || k > n) return 0;
    Rational b = 1;
    for (long j = 0; j < k; ++j) b = b * (n - j) / (j + 1);
    return b;
}

}  // namespace cybe
