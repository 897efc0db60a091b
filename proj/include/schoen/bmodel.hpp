#pragma once

#include <cstddef>
#include <vector>

#include "schoen/bi_nilpotent.hpp"
#include "schoen/coefficient_table.hpp"
#include "schoen/dual_scalar.hpp"
#include "schoen/trivariate_series.hpp"
#include "schoen/truncated_series.hpp"

namespace schoen::bmodel {

template <typename T>
using Matrix = std::vector<std::vector<T>>;

/// g(n) = 1 + 1/2 + ⋯ + 1/n.
struct HarmonicValue {
  unsigned n = 0;
  Rational value{0};

  static HarmonicValue of(unsigned n);
  HarmonicValue next() const { return {n + 1, value + make_rational(1, n + 1)}; }
};

/// Rising factorial (x)_m = x(x+1)⋯(x+m−1) over dual numbers.
struct PochhammerDual {
  DualScalar base;
  unsigned length = 0;
  DualScalar value{1};

  static PochhammerDual start(const DualScalar& base) { return {base, 0, DualScalar(1)}; }
  PochhammerDual extend() const {
    return {base, length + 1, value * (base + DualScalar(static_cast<long>(length)))};
  }
};

PochhammerDual pochhammer(const DualScalar& base, unsigned length);

/// φ₀(w, ε) = Σ_n (1+3ε)_{3n} / (1+ε)_n³ · wⁿ with ε² = 0.
TruncatedSeries<DualScalar> phi0_dual(std::size_t N);

/// φ₁(w, ε) = Σ_n (1+3ε)_{3n+1} / (1+ε)_n³ · wⁿ = (1+3ε)φ₀ + 3w∂_wφ₀.
TruncatedSeries<DualScalar> phi1_dual(std::size_t N);

/// ξ(w, ε) = Σ_n (1+ε)_{3n} / n!³ · wⁿ.
TruncatedSeries<DualScalar> xi_dual(std::size_t N);

/// ε-component of log f for a dual series with f(0) = 1.
TruncatedSeries<Rational> log_derivative_part(const TruncatedSeries<DualScalar>& f);

/// ψ(w) = exp(∂_ρ log ξ(w, ρ)|_{ρ=0}).
TruncatedSeries<Rational> psi_series(std::size_t N);

/// S(u) = log Ū − log u = ∂_ρ log φ₀(u, ρ)|_{ρ=0}.
TruncatedSeries<Rational> mirror_logU_shift(std::size_t N);

/// Ū(u) = u·exp(S(u)).
TruncatedSeries<Rational> mirror_map(std::size_t N);

/// 9·ψ(u)^{−1}·u∂_u log Ū as a series in u (u∂_u log Ū = 1 + θS).
TruncatedSeries<Rational> b_generating_u(std::size_t N);

/// b_0..b_N: b_generating_u re-expanded in Ū through the inverse mirror map.
/// Throws IntegralityError if any coefficient is fractional.
CoefficientTable b_series(std::size_t N);

/// Ω^{(0)}(u) = Σ (m₀+3m₁)!(m₀+3m₂)! / (m₀!² m₁!³ m₂!³) u₀^{m₀}u₁^{m₁}u₂^{m₂}
/// over m₀ + m₁ + m₂ ≤ N.
TrivariateSeries omega0_trivariate(unsigned N);

/// N_{1,n₁,n₂} = b_{n₁}·b_{n₂}.
Matrix<Integer> n1_matrix_factorized(std::size_t N1, std::size_t N2);

/// N_{1,n₁,n₂} from the J₁J₂ part of log Ω̃ at first order in u₀, over
/// Q[J₁, J₂]/(J₁², J₂²). Modulo u₀², Ω̃ = φ₀(u₁,J₁)φ₀(u₂,J₂) + φ₁(u₁,J₁)φ₁(u₂,J₂)u₀,
/// so the u₀-part of its logarithm is φ₁φ₁/(φ₀φ₀). Its J₁J₂ part is P₀/9 per
/// unit u₀; dividing 9× that by ψ(u₁)ψ(u₂) and substituting the inverse mirror
/// map in each variable gives Σ N_{1,n₁,n₂} Ū₁^{n₁}Ū₂^{n₂}.
Matrix<Integer> n1_matrix_binilpotent(std::size_t N1, std::size_t N2);

/// Both routes above; throws RouteMismatchError on disagreement.
Matrix<Integer> p0_first_order(std::size_t N1, std::size_t N2);

/// True iff the J₁J₂ part of log(φ₀(u₁,J₁)·φ₀(u₂,J₂)) vanishes through (N1, N2).
bool n0_vanishing_check(std::size_t N1, std::size_t N2);

}  // namespace schoen::bmodel
