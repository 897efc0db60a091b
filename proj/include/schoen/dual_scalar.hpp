#pragma once

#include <optional>
#include <ostream>
#include <string>
#include <utility>

#include "schoen/ring.hpp"

namespace schoen {

/// value + deriv·ε with ε² = 0, over the rationals. Carries one formal
/// derivative through a computation (forward mode).
class DualScalar {
 public:
  DualScalar() = default;
  DualScalar(long v) : value_(v) {}  // NOLINT: implicit like any ring literal
  DualScalar(Rational value, Rational deriv = 0) : value_(std::move(value)), deriv_(std::move(deriv)) {}

  const Rational& value() const { return value_; }
  const Rational& deriv() const { return deriv_; }

  friend DualScalar operator+(const DualScalar& a, const DualScalar& b) {
    return {a.value_ + b.value_, a.deriv_ + b.deriv_};
  }
  friend DualScalar operator-(const DualScalar& a, const DualScalar& b) {
    return {a.value_ - b.value_, a.deriv_ - b.deriv_};
  }
  friend DualScalar operator*(const DualScalar& a, const DualScalar& b) {
    return {a.value_ * b.value_, a.value_ * b.deriv_ + a.deriv_ * b.value_};
  }
  DualScalar operator-() const { return {-value_, -deriv_}; }
  DualScalar& operator+=(const DualScalar& o) { return *this = *this + o; }
  DualScalar& operator-=(const DualScalar& o) { return *this = *this - o; }
  DualScalar& operator*=(const DualScalar& o) { return *this = *this * o; }
  friend bool operator==(const DualScalar& a, const DualScalar& b) {
    return a.value_ == b.value_ && a.deriv_ == b.deriv_;
  }

  /// (a + bε)^{-1} = 1/a − (b/a²)ε; a unit iff a ≠ 0.
  std::optional<DualScalar> inverse() const {
    if (sgn(value_) == 0) return std::nullopt;
    Rational inv = Rational(1) / value_;
    return DualScalar(inv, -deriv_ * inv * inv);
  }

  friend std::ostream& operator<<(std::ostream& os, const DualScalar& d) {
    return os << d.value_ << " + " << d.deriv_ << "ε";
  }

 private:
  Rational value_{0};
  Rational deriv_{0};
};

template <>
struct RingTraits<DualScalar> {
  static DualScalar zero() { return {}; }
  static DualScalar one() { return {1}; }
  static bool is_zero(const DualScalar& a) { return sgn(a.value()) == 0 && sgn(a.deriv()) == 0; }
  static std::optional<DualScalar> try_invert(const DualScalar& a) { return a.inverse(); }
  static DualScalar divide(const DualScalar& a, long k) {
    return {a.value() / Rational(k), a.deriv() / Rational(k)};
  }
  static std::string describe(const DualScalar& a) {
    return a.value().get_str() + " + " + a.deriv().get_str() + "*eps";
  }
};

}  // namespace schoen
