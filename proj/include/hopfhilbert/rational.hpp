#pragma once

#include <boost/multiprecision/cpp_int.hpp>

#include <string>
#include <string_view>

#include "hopfhilbert/errors.hpp"

namespace hopfhilbert {

using Integer = boost::multiprecision::cpp_int;

// cpp_rational keeps denominator > 0 and gcd(num, den) = 1 after every
// operation; zero is stored as 0/1.
using Rational = boost::multiprecision::cpp_rational;

inline bool is_zero(const Rational& q) { return q.is_zero(); }

inline bool is_integer(const Rational& q) {
  return boost::multiprecision::denominator(q) == 1;
}

/// "p/q", or "p" when q = 1.
inline std::string to_string(const Rational& q) {
  const Integer& den = boost::multiprecision::denominator(q);
  std::string out = boost::multiprecision::numerator(q).str();
  if (den != 1) {
    out += '/';
    out += den.str();
  }
  return out;
}

namespace detail {

inline bool all_digits(std::string_view s) {
  if (s.empty()) return false;
  for (char c : s)
    if (c < '0' || c > '9') return false;
  return true;
}

}  // namespace detail

/// Parses "[-]p" or "[-]p/q" with decimal digits only. No whitespace, no
/// decimal point, no exponent.
inline Rational parse_rational(std::string_view text) {
  std::string_view body = text;
  bool negative = false;
  if (!body.empty() && body.front() == '-') {
    negative = true;
    body.remove_prefix(1);
  }
  const auto slash = body.find('/');
  std::string_view num_part = body.substr(0, slash);
  std::string_view den_part =
      slash == std::string_view::npos ? std::string_view("1") : body.substr(slash + 1);
  if (!detail::all_digits(num_part) || !detail::all_digits(den_part))
    fail(ErrorKind::ParseError, "invalid rational \"" + std::string(text) + "\"");
  const Integer num{std::string(num_part)};
  const Integer den{std::string(den_part)};
  if (den == 0)
    fail(ErrorKind::ParseError, "zero denominator in \"" + std::string(text) + "\"");
  Rational q(num, den);
  return negative ? Rational(-q) : q;
}

}  // namespace hopfhilbert
