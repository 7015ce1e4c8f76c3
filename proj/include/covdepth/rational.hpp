#pragma once

#include <gmpxx.h>

#include <string>

namespace covdepth {

/// Arbitrary-precision integer and rational.  GMP keeps mpq_class canonical
/// (gcd(num, den) = 1, den > 0) after every arithmetic operation, which is the
/// invariant all exact results in this library rely on.
using Int = mpz_class;
using Rat = mpq_class;

/// Decimal rendering of an exact rational with `sig_digits` significant
/// digits, round half to even on the digit after the last kept one.
/// Plain positional notation (no exponent); 0 renders as "0".
std::string decimal_string(const Rat& value, int sig_digits = 15);

/// Parse a decimal literal ("1.25", "-0.5", "3") into an exact rational.
/// Throws BadInput on anything else.
Rat rat_from_decimal(const std::string& text);

/// |a - b| <= 10^-digits, evaluated exactly.
bool decimal_close(const Rat& a, const Rat& b, int digits);

}  // namespace covdepth
