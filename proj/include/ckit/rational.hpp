#pragma once

#include <boost/multiprecision/cpp_int.hpp>
#include <stdexcept>
#include <string>

namespace ckit {

using Integer = boost::multiprecision::cpp_int;
using Rational = boost::multiprecision::cpp_rational;

inline bool is_integral(const Rational &r) { return denominator(r) == 1; }

inline long long to_ll(const Rational &r) {
  if (!is_integral(r)) throw std::runtime_error("to_ll: not an integer: " + r.str());
  Integer n = numerator(r);
  if (n > std::numeric_limits<long long>::max() || n < std::numeric_limits<long long>::min())
    throw std::runtime_error("to_ll: out of range");
  return static_cast<long long>(n);
}

// "p/q" or "p"; used by weight (de)serialization.
inline Rational rational_from_string(const std::string &s) {
  auto slash = s.find('/');
  if (slash == std::string::npos) return Rational(Integer(s));
  return Rational(Integer(s.substr(0, slash)), Integer(s.substr(slash + 1)));
}

inline std::string rational_to_string(const Rational &r) {
  if (is_integral(r)) return numerator(r).str();
  return numerator(r).str() + "/" + denominator(r).str();
}

}  // namespace ckit
