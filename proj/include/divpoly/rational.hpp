#pragma once

#include <gmpxx.h>

#include <string>
#include <string_view>

namespace divpoly {

// Exact rationals. GMP keeps every result in lowest terms with a positive
// denominator; values built from raw numerator/denominator pairs go through
// make_rational so that invariant also holds for them.
using Rational = mpq_class;
using Integer = mpz_class;

Rational make_rational(const Integer& num, const Integer& den);

// Accepts "p", "-p", "p/q" (q != 0). Throws Error{InvalidFormat} otherwise.
Rational parse_rational(std::string_view text);

// "p" when the denominator is 1, "p/q" otherwise.
std::string to_string(const Rational& q);

inline bool is_zero(const Rational& q) { return sgn(q) == 0; }

}  // namespace divpoly
