#pragma once

#include <optional>
#include <ostream>
#include <string>
#include <utility>

#include "schoen/ring.hpp"

namespace schoen {

/// c00 + c10·J₁ + c01·J₂ + c11·J₁J₂ over the rationals, with J₁² = J₂² = 0.
/// Equivalently a dual number in J₁ whose parts are dual numbers in J₂.
class BiNilpotent {
 public:
  BiNilpotent() = default;
  BiNilpotent(long c) : c00_(c) {}  // NOLINT
  BiNilpotent(Rational c00, Rational c10 = 0, Rational c01 = 0, Rational c11 = 0)
      : c00_(std::move(c00)), c10_(std::move(c10)), c01_(std::move(c01)), c11_(std::move(c11)) {}

  const Rational& c00() const { return c00_; }
  const Rational& c10() const { return c10_; }
  const Rational& c01() const { return c01_; }
  const Rational& c11() const { return c11_; }

  friend BiNilpotent operator+(const BiNilpotent& a, const BiNilpotent& b) {
    return {a.c00_ + b.c00_, a.c10_ + b.c10_, a.c01_ + b.c01_, a.c11_ + b.c11_};
  }
  friend BiNilpotent operator-(const BiNilpotent& a, const BiNilpotent& b) {
    return {a.c00_ - b.c00_, a.c10_ - b.c10_, a.c01_ - b.c01_, a.c11_ - b.c11_};
  }
  friend BiNilpotent operator*(const BiNilpotent& a, const BiNilpotent& b) {
    return {a.c00_ * b.c00_,
            a.c00_ * b.c10_ + a.c10_ * b.c00_,
            a.c00_ * b.c01_ + a.c01_ * b.c00_,
            a.c00_ * b.c11_ + a.c10_ * b.c01_ + a.c01_ * b.c10_ + a.c11_ * b.c00_};
  }
  BiNilpotent operator-() const { return {-c00_, -c10_, -c01_, -c11_}; }
  BiNilpotent& operator+=(const BiNilpotent& o) { return *this = *this + o; }
  BiNilpotent& operator-=(const BiNilpotent& o) { return *this = *this - o; }
  BiNilpotent& operator*=(const BiNilpotent& o) { return *this = *this * o; }
  friend bool operator==(const BiNilpotent& a, const BiNilpotent& b) {
    return a.c00_ == b.c00_ && a.c10_ == b.c10_ && a.c01_ == b.c01_ && a.c11_ == b.c11_;
  }

  /// Unit iff c00 ≠ 0. With x = a⁻¹ the inverse is
  /// x − x²c10·J₁ − x²c01·J₂ + x³(2·c10·c01 − c00·c11)·J₁J₂.
  std::optional<BiNilpotent> inverse() const {
    if (sgn(c00_) == 0) return std::nullopt;
    Rational x = Rational(1) / c00_;
    Rational x2 = x * x;
    return BiNilpotent(x, -x2 * c10_, -x2 * c01_, x2 * x * (2 * c10_ * c01_ - c00_ * c11_));
  }

  friend std::ostream& operator<<(std::ostream& os, const BiNilpotent& v) {
    return os << v.c00_ << " + " << v.c10_ << "J1 + " << v.c01_ << "J2 + " << v.c11_ << "J1J2";
  }

 private:
  Rational c00_{0};
  Rational c10_{0};
  Rational c01_{0};
  Rational c11_{0};
};

template <>
struct RingTraits<BiNilpotent> {
  static BiNilpotent zero() { return {}; }
  static BiNilpotent one() { return {1}; }
  static bool is_zero(const BiNilpotent& a) {
    return sgn(a.c00()) == 0 && sgn(a.c10()) == 0 && sgn(a.c01()) == 0 && sgn(a.c11()) == 0;
  }
  static std::optional<BiNilpotent> try_invert(const BiNilpotent& a) { return a.inverse(); }
  static BiNilpotent divide(const BiNilpotent& a, long k) {
    Rational d(k);
    return {a.c00() / d, a.c10() / d, a.c01() / d, a.c11() / d};
  }
  static std::string describe(const BiNilpotent& a) {
    return a.c00().get_str() + " + " + a.c10().get_str() + "*J1 + " + a.c01().get_str() + "*J2 + " +
           a.c11().get_str() + "*J1J2";
  }
};

}  // namespace schoen
