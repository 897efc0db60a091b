#include "schoen/trivariate_series.hpp"

#include <algorithm>
#include <stdexcept>

namespace schoen {

bool TrivariateSeries::admits(const Exponent& e) const {
  for (std::size_t i = 0; i < 3; ++i)
    if (e[i] > orders_[i]) return false;
  return !max_total_ || e[0] + e[1] + e[2] <= *max_total_;
}

Rational TrivariateSeries::coefficient(const Exponent& e) const {
  auto it = terms_.find(e);
  return it == terms_.end() ? Rational(0) : it->second;
}

void TrivariateSeries::set(const Exponent& e, const Rational& value) {
  if (!admits(e)) throw std::out_of_range("TrivariateSeries::set: monomial outside truncation");
  if (sgn(value) == 0)
    terms_.erase(e);
  else
    terms_[e] = value;
}

void TrivariateSeries::accumulate(const Exponent& e, const Rational& value) {
  if (!admits(e) || sgn(value) == 0) return;
  auto [it, inserted] = terms_.try_emplace(e, value);
  if (!inserted) {
    it->second += value;
    if (sgn(it->second) == 0) terms_.erase(it);
  }
}

TrivariateSeries TrivariateSeries::common_truncation(const TrivariateSeries& a, const TrivariateSeries& b) {
  Exponent orders{};
  for (std::size_t i = 0; i < 3; ++i) orders[i] = std::min(a.orders_[i], b.orders_[i]);
  std::optional<unsigned> cap = a.max_total_;
  if (b.max_total_) cap = cap ? std::min(*cap, *b.max_total_) : b.max_total_;
  return TrivariateSeries(orders, cap);
}

TrivariateSeries operator+(const TrivariateSeries& a, const TrivariateSeries& b) {
  auto out = TrivariateSeries::common_truncation(a, b);
  for (const auto& [e, v] : a.terms_) out.accumulate(e, v);
  for (const auto& [e, v] : b.terms_) out.accumulate(e, v);
  return out;
}

TrivariateSeries operator-(const TrivariateSeries& a, const TrivariateSeries& b) {
  auto out = TrivariateSeries::common_truncation(a, b);
  for (const auto& [e, v] : a.terms_) out.accumulate(e, v);
  for (const auto& [e, v] : b.terms_) out.accumulate(e, -v);
  return out;
}

TrivariateSeries operator*(const TrivariateSeries& a, const TrivariateSeries& b) {
  auto out = TrivariateSeries::common_truncation(a, b);
  for (const auto& [ea, va] : a.terms_)
    for (const auto& [eb, vb] : b.terms_)
      out.accumulate({ea[0] + eb[0], ea[1] + eb[1], ea[2] + eb[2]}, va * vb);
  return out;
}

TrivariateSeries operator*(const Rational& c, const TrivariateSeries& a) {
  TrivariateSeries out(a.orders_, a.max_total_);
  for (const auto& [e, v] : a.terms_) out.accumulate(e, c * v);
  return out;
}

TrivariateSeries TrivariateSeries::theta(unsigned variable) const {
  if (variable > 2) throw std::out_of_range("TrivariateSeries::theta: variable index");
  TrivariateSeries out(orders_, max_total_);
  for (const auto& [e, v] : terms_) out.accumulate(e, Rational(e[variable]) * v);
  return out;
}

TrivariateSeries TrivariateSeries::multiply_variable(unsigned variable) const {
  if (variable > 2) throw std::out_of_range("TrivariateSeries::multiply_variable: variable index");
  TrivariateSeries out(orders_, max_total_);
  for (const auto& [e, v] : terms_) {
    Exponent shifted = e;
    ++shifted[variable];
    out.accumulate(shifted, v);
  }
  return out;
}

}  // namespace schoen
