#pragma once

#include <boost/multiprecision/cpp_int.hpp>

#include <string>
#include <string_view>

namespace toda {

// All coefficients and Hurwitz numbers are exact rationals; no floating
// point appears anywhere in the library.
using Integer = boost::multiprecision::cpp_int;
using Rational = boost::multiprecision::cpp_rational;

Integer factorial(int n);

// base^e for integer base, e >= 0.
Integer int_pow(const Integer& base, int e);

// base^e with e of either sign; base must be nonzero when e < 0.
Rational rational_pow(const Rational& base, long e);

// Canonical "num/den" rendering, denominator always present ("4/1", "-1/2").
std::string rat_str(const Rational& q);

// Human rendering: omits "/1".
std::string rat_pretty(const Rational& q);

// Accepts "n", "-n", "n/d"; exact.  Throws ParseError on anything else.
Rational parse_rational(std::string_view text);

}  // namespace toda
