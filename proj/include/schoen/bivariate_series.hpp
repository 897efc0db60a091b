#pragma once

#include <algorithm>
#include <cstddef>
#include <stdexcept>
#include <utility>
#include <vector>

#include "schoen/truncated_series.hpp"

namespace schoen {

/// Dense series in two variables x, y truncated per variable:
/// Σ_{i ≤ N1, j ≤ N2} f_{ij} x^i y^j. Used for the two-variable u₁, u₂
/// expansions on the B-model side.
template <CoefficientRing R>
class BivariateSeries {
 public:
  using Traits = RingTraits<R>;

  BivariateSeries(std::size_t order_x, std::size_t order_y)
      : nx_(order_x), ny_(order_y), grid_((order_x + 1) * (order_y + 1), Traits::zero()) {}

  /// f(x)·g(y).
  static BivariateSeries outer(const TruncatedSeries<R>& f, const TruncatedSeries<R>& g) {
    BivariateSeries out(f.order(), g.order());
    for (std::size_t i = 0; i <= f.order(); ++i)
      for (std::size_t j = 0; j <= g.order(); ++j) out.at(i, j) = R(f[i] * g[j]);
    return out;
  }

  std::size_t order_x() const { return nx_; }
  std::size_t order_y() const { return ny_; }

  const R& operator()(std::size_t i, std::size_t j) const { return grid_.at(index(i, j)); }
  R& at(std::size_t i, std::size_t j) { return grid_.at(index(i, j)); }

  BivariateSeries truncate(std::size_t order_x, std::size_t order_y) const {
    order_x = std::min(order_x, nx_);
    order_y = std::min(order_y, ny_);
    BivariateSeries out(order_x, order_y);
    for (std::size_t i = 0; i <= order_x; ++i)
      for (std::size_t j = 0; j <= order_y; ++j) out.at(i, j) = (*this)(i, j);
    return out;
  }

  friend BivariateSeries operator+(const BivariateSeries& a, const BivariateSeries& b) {
    auto out = a.truncate(b.nx_, b.ny_);
    for (std::size_t i = 0; i <= out.nx_; ++i)
      for (std::size_t j = 0; j <= out.ny_; ++j) out.at(i, j) += b(i, j);
    return out;
  }

  friend BivariateSeries operator-(const BivariateSeries& a, const BivariateSeries& b) {
    auto out = a.truncate(b.nx_, b.ny_);
    for (std::size_t i = 0; i <= out.nx_; ++i)
      for (std::size_t j = 0; j <= out.ny_; ++j) out.at(i, j) -= b(i, j);
    return out;
  }

  friend BivariateSeries operator*(const BivariateSeries& a, const BivariateSeries& b) {
    std::size_t nx = std::min(a.nx_, b.nx_);
    std::size_t ny = std::min(a.ny_, b.ny_);
    BivariateSeries out(nx, ny);
    for (std::size_t i1 = 0; i1 <= nx; ++i1)
      for (std::size_t j1 = 0; j1 <= ny; ++j1) {
        const R& lhs = a(i1, j1);
        if (Traits::is_zero(lhs)) continue;
        for (std::size_t i2 = 0; i1 + i2 <= nx; ++i2)
          for (std::size_t j2 = 0; j1 + j2 <= ny; ++j2) out.at(i1 + i2, j1 + j2) += R(lhs * b(i2, j2));
      }
    return out;
  }

  friend bool operator==(const BivariateSeries& a, const BivariateSeries& b) {
    return a.nx_ == b.nx_ && a.ny_ == b.ny_ && a.grid_ == b.grid_;
  }

  template <typename Fn>
  auto map(Fn&& fn) const {
    using S = std::decay_t<decltype(fn(grid_[0]))>;
    BivariateSeries<S> out(nx_, ny_);
    for (std::size_t i = 0; i <= nx_; ++i)
      for (std::size_t j = 0; j <= ny_; ++j) out.at(i, j) = fn((*this)(i, j));
    return out;
  }

  /// The y-series sitting at x^i.
  TruncatedSeries<R> row(std::size_t i) const {
    std::vector<R> c(ny_ + 1);
    for (std::size_t j = 0; j <= ny_; ++j) c[j] = (*this)(i, j);
    return TruncatedSeries<R>(std::move(c));
  }

  /// The x-series sitting at y^j.
  TruncatedSeries<R> column(std::size_t j) const {
    std::vector<R> c(nx_ + 1);
    for (std::size_t i = 0; i <= nx_; ++i) c[i] = (*this)(i, j);
    return TruncatedSeries<R>(std::move(c));
  }

  /// Swaps the roles of x and y.
  BivariateSeries transpose() const {
    BivariateSeries out(ny_, nx_);
    for (std::size_t i = 0; i <= nx_; ++i)
      for (std::size_t j = 0; j <= ny_; ++j) out.at(j, i) = (*this)(i, j);
    return out;
  }

 private:
  std::size_t index(std::size_t i, std::size_t j) const {
    if (i > nx_ || j > ny_) throw std::out_of_range("BivariateSeries: index beyond truncation order");
    return i * (ny_ + 1) + j;
  }

  std::size_t nx_;
  std::size_t ny_;
  std::vector<R> grid_;
};

/// Inverse of a bivariate series whose constant term is a unit, solved in
/// increasing (i, j) order from f·g = 1.
template <CoefficientRing R>
BivariateSeries<R> bivariate_inverse(const BivariateSeries<R>& f) {
  using T = RingTraits<R>;
  auto inv0 = T::try_invert(f(0, 0));
  if (!inv0) throw SeriesDomainError("bivariate_inverse: constant term " + T::describe(f(0, 0)) + " is not a unit");
  BivariateSeries<R> g(f.order_x(), f.order_y());
  for (std::size_t i = 0; i <= f.order_x(); ++i)
    for (std::size_t j = 0; j <= f.order_y(); ++j) {
      if (i == 0 && j == 0) {
        g.at(0, 0) = *inv0;
        continue;
      }
      R acc = T::zero();
      for (std::size_t a = 0; a <= i; ++a)
        for (std::size_t b = 0; b <= j; ++b) {
          if (a == 0 && b == 0) continue;
          if (T::is_zero(f(a, b))) continue;
          acc += R(f(a, b) * g(i - a, j - b));
        }
      g.at(i, j) = R(-(*inv0 * acc));
    }
  return g;
}

/// log f for f(0, 0) = 1:
/// log f(x, y) = log f(0, y) + ∫₀^x (∂_x f / f) dx.
template <CoefficientRing R>
BivariateSeries<R> bivariate_log(const BivariateSeries<R>& f) {
  using T = RingTraits<R>;
  const std::size_t nx = f.order_x();
  const std::size_t ny = f.order_y();
  BivariateSeries<R> out(nx, ny);
  auto edge = series_log(f.row(0));
  for (std::size_t j = 0; j <= ny; ++j) out.at(0, j) = edge[j];
  if (nx == 0) return out;

  BivariateSeries<R> dx(nx - 1, ny);
  for (std::size_t i = 0; i < nx; ++i)
    for (std::size_t j = 0; j <= ny; ++j) dx.at(i, j) = R(R(static_cast<long>(i + 1)) * f(i + 1, j));
  auto quotient = dx * bivariate_inverse(f.truncate(nx - 1, ny));
  for (std::size_t i = 0; i < nx; ++i)
    for (std::size_t j = 0; j <= ny; ++j) out.at(i + 1, j) = T::divide(quotient(i, j), static_cast<long>(i + 1));
  return out;
}

/// Substitutes x → g(x) (g(0) = 0) in f(x, y).
template <CoefficientRing R>
BivariateSeries<R> bivariate_compose_x(const BivariateSeries<R>& f, const TruncatedSeries<R>& g) {
  using T = RingTraits<R>;
  if (!T::is_zero(g[0])) throw SeriesDomainError("bivariate_compose_x: inner series must vanish at 0");
  const std::size_t nx = std::min(f.order_x(), g.order());
  const std::size_t ny = f.order_y();
  BivariateSeries<R> out(nx, ny);
  auto power = TruncatedSeries<R>::one(nx);
  auto inner = g.truncate(nx);
  for (std::size_t i = 0; i <= nx; ++i) {
    // f_{i,·}(y) · g(x)^i
    for (std::size_t a = i; a <= nx; ++a) {
      const R& p = power[a];
      if (T::is_zero(p)) continue;
      for (std::size_t j = 0; j <= ny; ++j) out.at(a, j) += R(p * f(i, j));
    }
    if (i < nx) power = power * inner;
  }
  return out;
}

/// Substitutes y → g(y) (g(0) = 0) in f(x, y).
template <CoefficientRing R>
BivariateSeries<R> bivariate_compose_y(const BivariateSeries<R>& f, const TruncatedSeries<R>& g) {
  return bivariate_compose_x(f.transpose(), g).transpose();
}

}  // namespace schoen
