#pragma once

#include <boost/multiprecision/cpp_int.hpp>
#include <string>

namespace staircase {

using Integer = boost::multiprecision::cpp_int;

// Exact rational, kept in reduced form with positive denominator.
using Rational = boost::multiprecision::cpp_rational;

// "num/den", or plain "num" when the denominator is 1.
std::string to_string(const Rational& r);

Rational rational_abs(const Rational& r);

Integer factorial(int n);

}  // namespace staircase
