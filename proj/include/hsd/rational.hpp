#pragma once

#include <gmpxx.h>

#include <cstdint>
#include <string>
#include <string_view>

namespace hsd {

/// Exact arbitrary-precision rational. GMP keeps every arithmetic result in
/// lowest terms with a positive denominator.
using Rational = mpq_class;
using Integer = mpz_class;

/// Builds num/den in canonical form. Throws Error(InvalidArgument) on den == 0.
Rational make_rational(std::int64_t num, std::int64_t den = 1);
Rational make_rational(const Integer& num, const Integer& den);

/// Parses "num/den" or "num" with an optional leading '-' (ASCII or U+2212).
/// No whitespace, no '+', den must be nonzero. Result is canonicalized.
Rational parse_rational(std::string_view text);

/// "num/den", or "num" when the denominator is 1.
std::string to_string(const Rational& q);

/// Decimal approximation with `digits` fractional digits, truncated toward
/// zero. Display only.
std::string to_decimal(const Rational& q, int digits);

Rational pow(const Rational& base, unsigned exponent);
Rational factorial(unsigned n);

inline int sign(const Rational& q) { return sgn(q); }

bool is_canonical(const Rational& q);

}  // namespace hsd
