#pragma once

#include <stdexcept>
#include <string>

#include <boost/multiprecision/cpp_int.hpp>

namespace dilator {

using BigInt = boost::multiprecision::cpp_int;

/// Exact rational scalar. Always kept in lowest terms with positive
/// denominator by the backend.
using Rational = boost::multiprecision::cpp_rational;

/// Parses "p/q" or "p" (optional leading '-'). Throws std::invalid_argument
/// on anything else, including q <= 0.
Rational parse_rational(const std::string& text);

/// Canonical form: "p/q" in lowest terms with q > 0, or just "p" when q == 1.
std::string format_rational(const Rational& value);

inline Rational parse_rational(const std::string& text) {
  const auto bad = [&]() {
    throw std::invalid_argument("not a rational 'p/q': '" + text + "'");
  };
  if (text.empty()) bad();
  const auto slash = text.find('/');
  const auto is_int = [&](const std::string& s) {
    if (s.empty()) return false;
    std::size_t i = (s[0] == '-') ? 1 : 0;
    if (i == s.size()) return false;
    for (; i < s.size(); ++i)
      if (s[i] < '0' || s[i] > '9') return false;
    return true;
  };
  if (slash == std::string::npos) {
    if (!is_int(text)) bad();
    return Rational(BigInt(text));
  }
  const std::string num = text.substr(0, slash);
  const std::string den = text.substr(slash + 1);
  if (!is_int(num) || !is_int(den)) bad();
  BigInt q(den);
  if (q <= 0) bad();
  return Rational(BigInt(num), q);
}

inline std::string format_rational(const Rational& value) {
  const BigInt num = numerator(value);
  const BigInt den = denominator(value);
  if (den == 1) return num.str();
  return num.str() + "/" + den.str();
}

}  // namespace dilator
