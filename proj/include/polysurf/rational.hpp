#pragma once

#include <boost/multiprecision/cpp_int.hpp>

#include <string>

namespace polysurf {

/// Exact rational with arbitrary-precision numerator and denominator, always
/// kept in reduced form with a positive denominator.
using Rational = boost::multiprecision::cpp_rational;
using BigInt = boost::multiprecision::cpp_int;

inline Rational make_rational(long long num, long long den = 1) { return Rational(num, den); }

/// "p/q", or "p" when the denominator is one.
inline std::string to_string(const Rational& q) {
  if (boost::multiprecision::denominator(q) == 1) return boost::multiprecision::numerator(q).str();
  return boost::multiprecision::numerator(q).str() + "/" + boost::multiprecision::denominator(q).str();
}

inline int sign(const Rational& q) { return q.sign(); }

inline double to_double(const Rational& q) { return q.convert_to<double>(); }

}  // namespace polysurf
