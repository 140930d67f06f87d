#include "graphlim/rational.hpp"

#include "graphlim/errors.hpp"

#include <string>

namespace graphlim {

namespace {

BigInt parse_integer(std::string_view text, bool allow_sign) {
  std::string_view digits = text;
  bool negative = false;
  if (allow_sign && !digits.empty() && digits.front() == '-') {
    negative = true;
    digits.remove_prefix(1);
  }
  if (digits.empty()) throw ParseError("rational: empty integer field");
  BigInt value = 0;
  for (char c : digits) {
    if (c < '0' || c > '9')
      throw ParseError("rational: invalid character in '" + std::string(text) + "'");
    value = value * 10 + (c - '0');
  }
  return negative ? BigInt(-value) : value;
}

}  // namespace

Rational parse_rational(std::string_view text) {
  const auto slash = text.find('/');
  if (slash == std::string_view::npos) return Rational(parse_integer(text, true));
  BigInt num = parse_integer(text.substr(0, slash), true);
  BigInt den = parse_integer(text.substr(slash + 1), false);
  if (den == 0) throw ParseError("rational: zero denominator");
  return Rational(num, den);
}

std::string to_string(const Rational &r) {
  const auto &num = boost::multiprecision::numerator(r);
  const auto &den = boost::multiprecision::denominator(r);
  if (den == 1) return num.str();
  return num.str() + "/" + den.str();
}

double to_double(const Rational &r) { return r.convert_to<double>(); }

BigInt falling_factorial(std::size_t n, std::size_t k) {
  if (k > n) return 0;
  BigInt out = 1;
  for (std::size_t i = 0; i < k; ++i) out *= static_cast<unsigned long long>(n - i);
  return out;
}

}  // namespace graphlim
