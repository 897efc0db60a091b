#pragma once

#include <concepts>
#include <optional>
#include <string>

#include "schoen/errors.hpp"
#include "schoen/numeric.hpp"

namespace schoen {

/// Per-ring hooks used by the series engine. Every coefficient ring
/// specializes this with zero/one, a zero test, invert-if-unit, exact
/// division by a positive integer and a printable form for diagnostics.
template <typename R>
struct RingTraits;

template <>
struct RingTraits<Integer> {
  static Integer zero() { return 0; }
  static Integer one() { return 1; }
  static bool is_zero(const Integer& a) { return sgn(a) == 0; }
  static std::optional<Integer> try_invert(const Integer& a) {
    if (a == 1 || a == -1) return a;
    return std::nullopt;
  }
  static Integer divide(const Integer& a, long k) {
    Integer d(k);
    if (sgn(d) == 0 || !mpz_divisible_p(a.get_mpz_t(), d.get_mpz_t()))
      throw SeriesDomainError("inexact integer division of " + a.get_str() + " by " + std::to_string(k));
    Integer q;
    mpz_divexact(q.get_mpz_t(), a.get_mpz_t(), d.get_mpz_t());
    return q;
  }
  static std::string describe(const Integer& a) { return a.get_str(); }
};

template <>
struct RingTraits<Rational> {
  static Rational zero() { return 0; }
  static Rational one() { return 1; }
  static bool is_zero(const Rational& a) { return sgn(a) == 0; }
  static std::optional<Rational> try_invert(const Rational& a) {
    if (sgn(a) == 0) return std::nullopt;
    return Rational(1) / a;
  }
  static Rational divide(const Rational& a, long k) { return a / Rational(k); }
  static std::string describe(const Rational& a) { return a.get_str(); }
};

template <typename R>
concept CoefficientRing = std::copyable<R> && std::constructible_from<R, long> &&
                          requires(R& acc, const R& a, const R& b, long k) {
  acc += a;
  acc -= a;
  { R(a + b) } -> std::same_as<R>;
  { R(a - b) } -> std::same_as<R>;
  { R(a * b) } -> std::same_as<R>;
  { R(-a) } -> std::same_as<R>;
  { a == b } -> std::convertible_to<bool>;
  { RingTraits<R>::zero() } -> std::same_as<R>;
  { RingTraits<R>::one() } -> std::same_as<R>;
  { RingTraits<R>::is_zero(a) } -> std::same_as<bool>;
  { RingTraits<R>::try_invert(a) } -> std::same_as<std::optional<R>>;
  { RingTraits<R>::divide(a, k) } -> std::same_as<R>;
  { RingTraits<R>::describe(a) } -> std::same_as<std::string>;
};

}  // namespace schoen
