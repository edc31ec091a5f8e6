#pragma once

#include <boost/multiprecision/cpp_int.hpp>

namespace drgtk {

using Integer = boost::multiprecision::cpp_int;
using Rational = boost::multiprecision::cpp_rational;

inline Integer numerator(const Rational& q) { return boost::multiprecision::numerator(q); }
inline Integer denominator(const Rational& q) { return boost::multiprecision::denominator(q); }

/// floor(sqrt(n)) for n >= 0.
inline Integer isqrt(const Integer& n) { return boost::multiprecision::sqrt(n); }

inline bool is_perfect_square(const Integer& n) {
  if (n < 0) return false;
  Integer r = isqrt(n);
  return r * r == n;
}

/// C(m, 2)
inline Integer choose2(const Integer& m) { return m * (m - 1) / 2; }

}  // namespace drgtk
