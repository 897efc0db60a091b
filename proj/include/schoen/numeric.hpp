#pragma once

#include <gmpxx.h>

#include <string>

namespace schoen {

/// Arbitrary-precision integer.
using Integer = mpz_class;

/// Arbitrary-precision rational. gmpxx keeps results of arithmetic in lowest
/// terms as long as the operands are canonical; use make_rational() for any
/// value built from a numerator/denominator pair.
using Rational = mpq_class;

inline Rational make_rational(const Integer& num, const Integer& den) {
  Rational r(num, den);
  r.canonicalize();
  return r;
}

inline Rational make_rational(long num, long den = 1) {
  return make_rational(Integer(num), Integer(den));
}

inline bool is_integral(const Rational& r) { return r.get_den() == 1; }

inline std::string to_string(const Integer& v) { return v.get_str(); }
inline std::string to_string(const Rational& v) { return v.get_str(); }

/// n! as an exact integer.
inline Integer factorial(unsigned long n) {
  Integer r;
  mpz_fac_ui(r.get_mpz_t(), n);
  return r;
}

}  // namespace schoen
