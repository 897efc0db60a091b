#include "schoen/jacobi_theta.hpp"

#include <algorithm>
#include <array>
#include <cmath>
#include <stdexcept>
#include <vector>

namespace schoen::lattice {

Integer FractionalSeries::coefficient(long exponent) const {
  if (exponent < valuation) return 0;
  if (exponent > precision())
    throw std::out_of_range("FractionalSeries: ζ^" + std::to_string(exponent) + " is beyond the known precision");
  return series[static_cast<std::size_t>(exponent - valuation)];
}

std::string to_string(ThetaKind kind) {
  switch (kind) {
    case ThetaKind::k00: return "00";
    case ThetaKind::k01: return "01";
    case ThetaKind::k10: return "10";
    case ThetaKind::k11: return "11";
  }
  return "??";
}

FractionalSeries fractional_pow(const FractionalSeries& f, unsigned k) {
  FractionalSeries out;
  out.series = series_pow_int(f.series, static_cast<long>(k));
  out.valuation = f.valuation * static_cast<int>(k);
  out.phase = static_cast<int>((static_cast<unsigned>(f.phase) * k) % 4U);
  return out;
}

namespace {

// Σ_n sign(n)·ζ^{exponent(n)} over |n| ≤ ⌊√order⌋ + 2, keeping relative
// exponents 0..order. Every exponent used here is at least 9n² − 12|n|, so
// the window covers all terms that can land at or below `order`.
template <typename Exponent, typename Sign>
TruncatedSeries<Integer> quadratic_sum(std::size_t order, int valuation, Exponent exponent, Sign sign) {
  std::vector<Integer> coeffs(order + 1, Integer(0));
  auto reach = static_cast<long>(std::sqrt(static_cast<double>(order))) + 2;
  for (long n = -reach; n <= reach; ++n) {
    long rel = exponent(n) - valuation;
    if (rel < 0) throw std::logic_error("quadratic_sum: exponent below valuation");
    if (rel <= static_cast<long>(order)) coeffs[static_cast<std::size_t>(rel)] += sign(n);
  }
  return TruncatedSeries<Integer>(std::move(coeffs));
}

// ∏_{m≥1}(1 − U^m) to U^order.
TruncatedSeries<Integer> euler_product(std::size_t order) {
  auto acc = TruncatedSeries<Integer>::one(order);
  for (std::size_t m = 1; m <= order; ++m) {
    std::vector<Integer> factor(order + 1, Integer(0));
    factor[0] = 1;
    factor[m] = -1;
    acc = acc * TruncatedSeries<Integer>(std::move(factor));
  }
  return acc;
}

}  // namespace

FractionalSeries jacobi_theta_spec(ThetaKind kind, std::size_t N) {
  constexpr int K = FractionalSeries::kDenominator;
  // Lowest valuation is −3, so an eighth power loses 24 from the absolute
  // reach; relative order 24(N + 1) keeps it at or above ζ^{24N}.
  const std::size_t order = static_cast<std::size_t>(K) * (N + 1);
  FractionalSeries out;
  switch (kind) {
    case ThetaKind::k00:
    case ThetaKind::k01: {
      // θ(3t, t) = Σ_n U^{(3n² + 2n)/2}; the 01 characteristic adds (−1)^n.
      bool alternating = kind == ThetaKind::k01;
      out.valuation = 0;
      out.series = quadratic_sum(
          order, 0, [](long n) { return 12 * (3 * n * n + 2 * n); },
          [alternating](long n) { return (alternating && (n % 2 != 0)) ? -1L : 1L; });
      break;
    }
    case ThetaKind::k10: {
      // Half-integer shift k = s/2 with s odd: U^{(3k² + 2k)/2} = ζ^{9s² + 12s}.
      out.valuation = -3;
      out.series = quadratic_sum(
          order, -3, [](long n) { long s = 2 * n + 1; return 9 * s * s + 12 * s; },
          [](long) { return 1L; });
      break;
    }
    case ThetaKind::k11: {
      auto prod = euler_product(order / K);
      std::vector<Integer> coeffs(order + 1, Integer(0));
      for (std::size_t m = 0; m <= prod.order() && m * K <= order; ++m) coeffs[m * K] = prod[m];
      out.valuation = -3;
      out.phase = 3;
      out.series = TruncatedSeries<Integer>(std::move(coeffs));
      break;
    }
  }
  return out;
}

CoefficientTable theta_e8_restricted_jacobi(std::size_t N) {
  constexpr long K = FractionalSeries::kDenominator;
  struct Piece {
    FractionalSeries power;
    int sign;
  };
  std::array<Piece, 4> pieces{{
      {fractional_pow(jacobi_theta_spec(ThetaKind::k00, N), 8), 1},
      {fractional_pow(jacobi_theta_spec(ThetaKind::k01, N), 8), 1},
      {fractional_pow(jacobi_theta_spec(ThetaKind::k10, N), 8), 1},
      {fractional_pow(jacobi_theta_spec(ThetaKind::k11, N), 8), -1},
  }};

  const long top = K * static_cast<long>(N);
  long bottom = 0;
  for (auto& p : pieces) {
    if (p.power.phase % 2 != 0) throw std::logic_error("theta_e8_restricted_jacobi: eighth power is not real");
    if (p.power.phase == 2) p.sign = -p.sign;
    if (p.power.precision() < top) throw std::logic_error("theta_e8_restricted_jacobi: insufficient precision");
    bottom = std::min<long>(bottom, p.power.valuation);
  }

  CoefficientTable table{TableLabel::c, std::vector<Integer>(N + 1, Integer(0)),
                         "jacobi: (th00^8 + th01^8 + th10^8 - th11^8)/2, th11 by product formula"};
  for (long e = bottom; e <= top; ++e) {
    Integer total = 0;
    for (const auto& p : pieces) {
      if (p.sign > 0)
        total += p.power.coefficient(e);
      else
        total -= p.power.coefficient(e);
    }
    if (sgn(total) == 0) continue;
    if (e < 0 || e % K != 0)
      throw std::logic_error("theta_e8_restricted_jacobi: surviving fractional exponent ζ^" + std::to_string(e));
    if (!mpz_even_p(total.get_mpz_t()))
      throw std::logic_error("theta_e8_restricted_jacobi: odd total at U^" + std::to_string(e / K));
    table.values[static_cast<std::size_t>(e / K)] = total / 2;
  }
  return table;
}

}  // namespace schoen::lattice
