#pragma once

#include <gmpxx.h>

#include <cstdint>
#include <string>
#include <string_view>

namespace entcat {

/// Arbitrary-precision fraction, always canonical (lowest terms, positive
/// denominator). All comparisons are exact.
using Rational = mpq_class;
using Integer = mpz_class;

/// Parses "3", "0.22", ".5", "-1.25" or "50/103" exactly; decimals are read
/// in base 10, never through binary floating point.
Rational parse_rational(std::string_view text);

/// "2/5", "1", "-3/7".
std::string to_fraction_string(const Rational& value);

/// Fixed-point rendering rounded half-to-even at `digits` decimal places.
std::string to_decimal_string(const Rational& value, int digits = 4);

Rational pow(const Rational& base, std::uint64_t exponent);

double to_double(const Rational& value);

}  // namespace entcat
