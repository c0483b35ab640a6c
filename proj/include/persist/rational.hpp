#pragma once

#include <gmpxx.h>

#include <cstdint>
#include <string>
#include <string_view>

namespace persist {

/// Arbitrary-precision rational, always kept in canonical reduced form.
using Rational = mpq_class;
using Integer = mpz_class;

/// Parses "p/q", an integer, or a decimal such as "-0.25" or "1.5e-3".
/// Decimals are converted exactly (0.1 -> 1/10). Throws Error(Parse).
Rational parse_rational(std::string_view text);

/// Canonical "p/q" form; integers print without a denominator ("3", "-1").
std::string to_string(const Rational& q);

/// base^exp for any integer exponent; negative exponents need base != 0.
Rational pow(const Rational& base, std::int64_t exp);

Integer factorial(unsigned n);

/// num/den reduced; den must be nonzero.
Rational ratio(const Integer& num, const Integer& den);

inline int sign(const Rational& q) { return sgn(q); }

inline Rational abs_value(const Rational& q) { return abs(q); }

inline double to_double(const Rational& q) { return q.get_d(); }

/// Exact rational value of a finite double.
Rational from_double(double x);

}  // namespace persist
