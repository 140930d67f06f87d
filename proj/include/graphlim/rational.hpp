#pragma once

#include <boost/multiprecision/cpp_int.hpp>

#include <string>
#include <string_view>

namespace graphlim {

using BigInt = boost::multiprecision::cpp_int;
// Always kept in lowest terms with a positive denominator.
using Rational = boost::multiprecision::cpp_rational;

// Accepts "p/q" or an integer "p", with an optional leading '-'.
Rational parse_rational(std::string_view text);

// "p/q" in lowest terms, or "p" when the denominator is 1.
std::string to_string(const Rational &r);

double to_double(const Rational &r);

BigInt falling_factorial(std::size_t n, std::size_t k);

}  // namespace graphlim
