#pragma once

#include <boost/multiprecision/cpp_int.hpp>
#include <string>

namespace univalence {

/// Exact arbitrary-precision rational, used for reproducing closed-form constants.
using Rational = boost::multiprecision::cpp_rational;

/// "p/q" in lowest terms ("p" when q = 1).
inline std::string to_string(const Rational& r) {
  const auto num = boost::multiprecision::numerator(r);
  const auto den = boost::multiprecision::denominator(r);
  if (den == 1) return num.str();
  return num.str() + "/" + den.str();
}

/// Exact rational from a decimal literal such as "2.5", "-0.5" or "7/2".
Rational parse_rational(const std::string& text);

}  // namespace univalence
