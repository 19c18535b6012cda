#pragma once

#include <string>

#include <boost/multiprecision/cpp_int.hpp>

namespace lef {

// All exact arithmetic in this library runs over arbitrary-precision
// integers and rationals; nothing is ever rounded.
using Int = boost::multiprecision::cpp_int;
using Rational = boost::multiprecision::cpp_rational;

using boost::multiprecision::abs;
using boost::multiprecision::denominator;
using boost::multiprecision::gcd;
using boost::multiprecision::lcm;
using boost::multiprecision::numerator;

// base^exponent as an exact rational; exponent may be negative.
Rational rational_power(long base, const Int& exponent);

bool is_prime(long n);

std::string to_string(const Int& v);
std::string to_string(const Rational& v);

}  // namespace lef
