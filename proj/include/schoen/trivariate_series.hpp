#pragma once

#include <array>
#include <cstddef>
#include <map>
#include <optional>

#include "schoen/numeric.hpp"

namespace schoen {

/// Sparse series in u₀, u₁, u₂ over the rationals. Each variable has its own
/// truncation order, and an optional cap on the total degree m₀ + m₁ + m₂;
/// monomials outside either bound are never stored.
class TrivariateSeries {
 public:
  using Exponent = std::array<unsigned, 3>;

  explicit TrivariateSeries(Exponent orders, std::optional<unsigned> max_total_degree = std::nullopt)
      : orders_(orders), max_total_(max_total_degree) {}

  const Exponent& orders() const { return orders_; }
  std::optional<unsigned> max_total_degree() const { return max_total_; }

  /// Whether the monomial lies inside the truncation.
  bool admits(const Exponent& e) const;

  /// Coefficient of the monomial; zero when absent.
  Rational coefficient(const Exponent& e) const;

  /// Sets a coefficient. Zero values are not stored; monomials outside the
  /// truncation are rejected with std::out_of_range.
  void set(const Exponent& e, const Rational& value);

  const std::map<Exponent, Rational>& terms() const { return terms_; }

  friend TrivariateSeries operator+(const TrivariateSeries& a, const TrivariateSeries& b);
  friend TrivariateSeries operator-(const TrivariateSeries& a, const TrivariateSeries& b);
  friend TrivariateSeries operator*(const TrivariateSeries& a, const TrivariateSeries& b);
  friend TrivariateSeries operator*(const Rational& c, const TrivariateSeries& a);
  friend bool operator==(const TrivariateSeries& a, const TrivariateSeries& b) {
    return a.orders_ == b.orders_ && a.max_total_ == b.max_total_ && a.terms_ == b.terms_;
  }

  /// θ_{u_i} = u_i ∂/∂u_i.
  TrivariateSeries theta(unsigned variable) const;

  /// u_i · f; monomials pushed past the truncation are dropped.
  TrivariateSeries multiply_variable(unsigned variable) const;

 private:
  static TrivariateSeries common_truncation(const TrivariateSeries& a, const TrivariateSeries& b);
  void accumulate(const Exponent& e, const Rational& value);

  Exponent orders_;
  std::optional<unsigned> max_total_;
  std::map<Exponent, Rational> terms_;
};

}  // namespace schoen
