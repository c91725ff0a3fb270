#pragma once

#include <gmpxx.h>

#include <string>

namespace polytrope {

// Exact arithmetic everywhere: no floating point in the core.
// mpq_class keeps values canonicalized (lowest terms, positive denominator).
using Rational = mpq_class;
using Integer = mpz_class;

inline bool is_zero(const Rational& r) { return sgn(r) == 0; }

// gmpxx has no long long constructor; matrices store 64-bit integers.
inline Rational to_rational(long long v) {
    static_assert(sizeof(long) == sizeof(long long));
    return Rational(static_cast<long>(v));
}
inline bool is_integer(const Rational& r) {
    Rational t = r;  // callers may hand us a non-canonical mpq
    t.canonicalize();
    return t.get_den() == 1;
}

Integer factorial(int k);
Integer binomial(long n, long k);

// "p/q" for non-integers, plain integer string otherwise.
std::string to_string(const Rational& r);
Rational parse_rational(const std::string& s);

}  // namespace polytrope
