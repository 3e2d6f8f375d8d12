#include "toda/rational.hpp"

#include <stdexcept>

#include "toda/errors.hpp"

namespace toda {

Integer factorial(int n) {
  if (n < 0) throw DomainError("factorial of negative number");
  Integer f = 1;
  for (int i = 2; i <= n; ++i) f *= i;
  return f;
}

Integer int_pow(const Integer& base, int e) {
  if (e < 0) throw DomainError("int_pow with negative exponent");
  Integer acc = 1, b = base;
  int k = e;
  while (k > 0) {
    if (k & 1) acc *= b;
    b *= b;
    k >>= 1;
  }
  return acc;
}

Rational rational_pow(const Rational& base, long e) {
  if (e == 0) return Rational(1);
  if (base == 0 && e < 0) throw DomainError("zero base with negative exponent");
  Rational acc = 1, b = base;
  unsigned long k = e < 0 ? -static_cast<unsigned long>(e) : static_cast<unsigned long>(e);
  while (k > 0) {
    if (k & 1) acc *= b;
    b *= b;
    k >>= 1;
  }
  if (e < 0) acc = Rational(1) / acc;
  return acc;
}

std::string rat_str(const Rational& q) {
  return numerator(q).str() + "/" + denominator(q).str();
}

std::string rat_pretty(const Rational& q) {
  if (denominator(q) == 1) return numerator(q).str();
  return rat_str(q);
}

namespace {
Integer parse_integer(std::string_view text) {
  try {
    return Integer(std::string(text));
  } catch (const std::runtime_error&) {
    throw ParseError("invalid integer '" + std::string(text) + "'");
  }
}
}  // namespace

Rational parse_rational(std::string_view text) {
  auto slash = text.find('/');
  if (slash == std::string_view::npos) {
    return Rational(parse_integer(text));
  }
  Integer num = parse_integer(text.substr(0, slash));
  Integer den = parse_integer(text.substr(slash + 1));
  if (den == 0) throw ParseError("zero denominator in '" + std::string(text) + "'");
  return Rational(num, den);
}

}  // namespace toda
