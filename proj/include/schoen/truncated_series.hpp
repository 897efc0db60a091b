#pragma once

#include <algorithm>
#include <cstddef>
#include <ostream>
#include <span>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "schoen/errors.hpp"
#include "schoen/ring.hpp"

namespace schoen {

/// Univariate formal power series f_0 + f_1 x + ... + f_N x^N + O(x^{N+1})
/// over a coefficient ring R. The truncation order N travels with the value;
/// binary operations return the smaller of the two orders and nothing ever
/// extrapolates past what its inputs determine.
template <CoefficientRing R>
class TruncatedSeries {
 public:
  using coefficient_type = R;
  using Traits = RingTraits<R>;

  /// Zero series of the given order.
  explicit TruncatedSeries(std::size_t order) : coeffs_(order + 1, Traits::zero()) {}

  /// Takes ownership of coefficients 0..N; the order is size() − 1.
  explicit TruncatedSeries(std::vector<R> coeffs) : coeffs_(std::move(coeffs)) {
    if (coeffs_.empty()) throw std::invalid_argument("TruncatedSeries needs at least one coefficient");
  }

  static TruncatedSeries constant(R c, std::size_t order) {
    TruncatedSeries s(order);
    s.coeffs_[0] = std::move(c);
    return s;
  }
  static TruncatedSeries one(std::size_t order) { return constant(Traits::one(), order); }

  /// The series x (identity map); order must be at least 1 to be meaningful.
  static TruncatedSeries variable(std::size_t order) {
    TruncatedSeries s(order);
    if (order >= 1) s.coeffs_[1] = Traits::one();
    return s;
  }

  std::size_t order() const { return coeffs_.size() - 1; }
  const R& operator[](std::size_t n) const { return coeffs_.at(n); }
  std::span<const R> coefficients() const { return coeffs_; }

  TruncatedSeries truncate(std::size_t order) const {
    if (order >= this->order()) return *this;
    return TruncatedSeries(std::vector<R>(coeffs_.begin(), coeffs_.begin() + static_cast<std::ptrdiff_t>(order) + 1));
  }

  bool is_zero() const {
    return std::all_of(coeffs_.begin(), coeffs_.end(), [](const R& c) { return Traits::is_zero(c); });
  }

  friend TruncatedSeries operator+(const TruncatedSeries& a, const TruncatedSeries& b) {
    std::size_t n = std::min(a.order(), b.order());
    std::vector<R> out(n + 1);
    for (std::size_t i = 0; i <= n; ++i) out[i] = R(a.coeffs_[i] + b.coeffs_[i]);
    return TruncatedSeries(std::move(out));
  }
  friend TruncatedSeries operator-(const TruncatedSeries& a, const TruncatedSeries& b) {
    std::size_t n = std::min(a.order(), b.order());
    std::vector<R> out(n + 1);
    for (std::size_t i = 0; i <= n; ++i) out[i] = R(a.coeffs_[i] - b.coeffs_[i]);
    return TruncatedSeries(std::move(out));
  }
  TruncatedSeries operator-() const {
    std::vector<R> out(coeffs_.size());
    for (std::size_t i = 0; i < coeffs_.size(); ++i) out[i] = R(-coeffs_[i]);
    return TruncatedSeries(std::move(out));
  }

  /// Cauchy product; zero coefficients of either factor are skipped, which
  /// matters for the very sparse theta series.
  friend TruncatedSeries operator*(const TruncatedSeries& a, const TruncatedSeries& b) {
    std::size_t n = std::min(a.order(), b.order());
    std::vector<R> out(n + 1, Traits::zero());
    std::vector<std::size_t> nz_b;
    for (std::size_t j = 0; j <= n; ++j)
      if (!Traits::is_zero(b.coeffs_[j])) nz_b.push_back(j);
    for (std::size_t i = 0; i <= n; ++i) {
      const R& ai = a.coeffs_[i];
      if (Traits::is_zero(ai)) continue;
      for (std::size_t j : nz_b) {
        if (i + j > n) break;
        out[i + j] += R(ai * b.coeffs_[j]);
      }
    }
    return TruncatedSeries(std::move(out));
  }

  friend TruncatedSeries operator*(const R& c, const TruncatedSeries& a) {
    std::vector<R> out(a.coeffs_.size());
    for (std::size_t i = 0; i < out.size(); ++i) out[i] = R(c * a.coeffs_[i]);
    return TruncatedSeries(std::move(out));
  }

  friend bool operator==(const TruncatedSeries& a, const TruncatedSeries& b) {
    return a.coeffs_ == b.coeffs_;
  }

  /// Applies fn to every coefficient, producing a series over another ring.
  template <typename Fn>
  auto map(Fn&& fn) const {
    using S = std::decay_t<decltype(fn(coeffs_[0]))>;
    std::vector<S> out;
    out.reserve(coeffs_.size());
    for (const R& c : coeffs_) out.push_back(fn(c));
    return TruncatedSeries<S>(std::move(out));
  }

  friend std::ostream& operator<<(std::ostream& os, const TruncatedSeries& s) {
    bool first = true;
    for (std::size_t i = 0; i < s.coeffs_.size(); ++i) {
      if (Traits::is_zero(s.coeffs_[i])) continue;
      if (!first) os << " + ";
      first = false;
      os << "(" << Traits::describe(s.coeffs_[i]) << ")";
      if (i > 0) os << "*x^" << i;
    }
    if (first) os << "0";
    return os << " + O(x^" << s.order() + 1 << ")";
  }

 private:
  std::vector<R> coeffs_;
};

template <CoefficientRing R>
TruncatedSeries<R> series_mul(const TruncatedSeries<R>& f, const TruncatedSeries<R>& g) {
  return f * g;
}

/// Multiplicative inverse; the constant term must be a unit of R.
template <CoefficientRing R>
TruncatedSeries<R> series_inverse(const TruncatedSeries<R>& f) {
  using T = RingTraits<R>;
  auto inv0 = T::try_invert(f[0]);
  if (!inv0) throw SeriesDomainError("series_inverse: constant term " + T::describe(f[0]) + " is not a unit");
  std::vector<R> r(f.order() + 1, T::zero());
  r[0] = *inv0;
  for (std::size_t n = 1; n <= f.order(); ++n) {
    R acc = T::zero();
    for (std::size_t k = 1; k <= n; ++k)
      if (!T::is_zero(f[k])) acc += R(f[k] * r[n - k]);
    r[n] = R(-(*inv0 * acc));
  }
  return TruncatedSeries<R>(std::move(r));
}

/// θf = x·f'(x): coefficient n becomes n·f_n.
template <CoefficientRing R>
TruncatedSeries<R> series_theta_derivative(const TruncatedSeries<R>& f) {
  std::vector<R> out(f.order() + 1);
  for (std::size_t n = 0; n <= f.order(); ++n) out[n] = R(R(static_cast<long>(n)) * f[n]);
  return TruncatedSeries<R>(std::move(out));
}

/// log f for f with constant term exactly 1, from n·L_n = n·f_n − Σ_{k<n} k·L_k·f_{n−k}.
template <CoefficientRing R>
TruncatedSeries<R> series_log(const TruncatedSeries<R>& f) {
  using T = RingTraits<R>;
  if (!(f[0] == T::one()))
    throw SeriesDomainError("series_log: constant term must be 1, got " + T::describe(f[0]));
  std::size_t N = f.order();
  std::vector<R> kl(N + 1, T::zero());  // k·L_k
  std::vector<R> out(N + 1, T::zero());
  for (std::size_t n = 1; n <= N; ++n) {
    R acc = R(R(static_cast<long>(n)) * f[n]);
    for (std::size_t k = 1; k < n; ++k)
      if (!T::is_zero(f[n - k])) acc -= R(kl[k] * f[n - k]);
    kl[n] = acc;
    out[n] = T::divide(acc, static_cast<long>(n));
  }
  return TruncatedSeries<R>(std::move(out));
}

/// exp f for f with zero constant term, from n·E_n = Σ_{k=1}^{n} k·f_k·E_{n−k}.
template <CoefficientRing R>
TruncatedSeries<R> series_exp(const TruncatedSeries<R>& f) {
  using T = RingTraits<R>;
  if (!T::is_zero(f[0]))
    throw SeriesDomainError("series_exp: constant term must be 0, got " + T::describe(f[0]));
  std::size_t N = f.order();
  std::vector<R> kf(N + 1, T::zero());
  for (std::size_t k = 1; k <= N; ++k) kf[k] = R(R(static_cast<long>(k)) * f[k]);
  std::vector<R> out(N + 1, T::zero());
  out[0] = T::one();
  for (std::size_t n = 1; n <= N; ++n) {
    R acc = T::zero();
    for (std::size_t k = 1; k <= n; ++k)
      if (!T::is_zero(kf[k])) acc += R(kf[k] * out[n - k]);
    out[n] = T::divide(acc, static_cast<long>(n));
  }
  return TruncatedSeries<R>(std::move(out));
}

/// f^k by repeated squaring; negative k inverts first.
template <CoefficientRing R>
TruncatedSeries<R> series_pow_int(const TruncatedSeries<R>& f, long k) {
  if (k < 0) return series_pow_int(series_inverse(f), -k);
  auto result = TruncatedSeries<R>::one(f.order());
  auto base = f;
  auto e = static_cast<unsigned long>(k);
  while (e != 0) {
    if (e & 1UL) result = result * base;
    e >>= 1;
    if (e != 0) base = base * base;
  }
  return result;
}

/// f(g(x)) by Horner's rule; g must have zero constant term.
template <CoefficientRing R>
TruncatedSeries<R> series_compose(const TruncatedSeries<R>& f, const TruncatedSeries<R>& g) {
  using T = RingTraits<R>;
  if (!T::is_zero(g[0]))
    throw SeriesDomainError("series_compose: inner series must have zero constant term, got " + T::describe(g[0]));
  std::size_t N = std::min(f.order(), g.order());
  auto inner = g.truncate(N);
  auto acc = TruncatedSeries<R>::constant(f[N], N);
  for (std::size_t i = N; i-- > 0;) {
    acc = acc * inner;
    acc = acc + TruncatedSeries<R>::constant(f[i], N);
  }
  return acc;
}

/// f(x^k): spreads coefficients out by a factor k, keeping the order.
template <CoefficientRing R>
TruncatedSeries<R> series_substitute_power(const TruncatedSeries<R>& f, std::size_t k) {
  if (k == 0) throw std::invalid_argument("series_substitute_power: k must be positive");
  std::vector<R> out(f.order() + 1, RingTraits<R>::zero());
  for (std::size_t n = 0; n * k <= f.order(); ++n) out[n * k] = f[n];
  return TruncatedSeries<R>(std::move(out));
}

/// Compositional inverse of the mirror-map-shaped series V = u·exp(S(u)).
/// Returns u(V) with u(V) = V + O(V²), built one coefficient per pass of the
/// fixed point u ← V·exp(−S(u)). The result order is min(N, S.order() + 1).
TruncatedSeries<Rational> mirror_reversion(const TruncatedSeries<Rational>& S, std::size_t N);

}  // namespace schoen
