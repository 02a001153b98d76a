#include "staircase/rational.hpp"

namespace staircase {

std::string to_string(const Rational& r) {
  if (denominator(r) == 1) return numerator(r).str();
  return numerator(r).str() + "/" + denominator(r).str();
}

Rational rational_abs(const Rational& r) { return r < 0 ? Rational(-r) : r; }

Integer factorial(int n) {
  Integer f = 1;
  for (int k = 2; k <= n; ++k) f *= k;
  return f;
}

}  // namespace staircase
