#pragma once

#include <gmpxx.h>

#include <string>

namespace gridmono {

using BigInt = mpz_class;
using Rational = mpq_class;

// Parses "3", "-5/2" or "0.25" into an exact rational.
Rational parse_rational(const std::string& text);

// "p/q" in decimal digits, or just "p" when the denominator is 1.
std::string rational_to_string(const Rational& q);

// True iff q is the 8th power of a rational (numerator and denominator
// both perfect 8th powers after canonicalisation).
bool is_rational_8th_power(const Rational& q);

}  // namespace gridmono
