#pragma once

#include <gmpxx.h>

#include <string>

namespace shor {

using Integer = mpz_class;

/// Exact reduced fraction. All probabilities in this library are carried as
/// canonical mpq values: gcd(num, den) = 1 and den >= 1.
using Rational = mpq_class;

/// Builds the canonical Rational num/den. Throws InvalidInputError on den = 0.
Rational make_rational(const Integer& num, const Integer& den);

/// Parses decimal strings into a canonical Rational.
Rational rational_from_string(const std::string& num, const std::string& den);

/// Decimal string of `value` rounded half-to-even to `digits` significant
/// digits. Fixed notation near 1, scientific for very small magnitudes.
std::string approx_decimal(const Rational& value, int digits = 12);

/// approx_decimal(value) reparsed as the nearest double.
double approx_double(const Rational& value);

}  // namespace shor
