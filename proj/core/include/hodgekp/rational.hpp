#pragma once

#include <gmpxx.h>

#include <string>
#include <string_view>

namespace hodgekp {

// Exact rational, always canonical (lowest terms, positive denominator).
using Rational = mpq_class;

Rational rat(long num, long den = 1);
Rational parse_rational(std::string_view text);
std::string to_string(const Rational& r);

// n!! with the conventions (-1)!! = 0!! = 1.
Rational double_factorial(int n);
Rational factorial(int n);
Rational power(const Rational& base, int exponent);

}  // namespace hodgekp
