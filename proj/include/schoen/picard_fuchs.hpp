#pragma once

#include <array>
#include <optional>
#include <span>
#include <string>
#include <variant>
#include <vector>

#include "schoen/numeric.hpp"
#include "schoen/trivariate_series.hpp"

namespace schoen::bmodel {

/// a₀θ_{u₀} + a₁θ_{u₁} + a₂θ_{u₂} + c.
struct ThetaAffine {
  std::array<long, 3> theta{};
  long constant = 0;
};

/// Multiplication by u_i.
struct MultiplyBy {
  unsigned variable = 0;
};

using PfFactor = std::variant<ThetaAffine, MultiplyBy>;

/// coefficient · factors[0] ∘ factors[1] ∘ ⋯ (the rightmost factor acts first).
struct PfTerm {
  Rational coefficient;
  std::vector<PfFactor> factors;
};

struct PfOperator {
  std::string name;
  std::vector<PfTerm> terms;
};

/// D₁, D₂, D₃ annihilating the periods at the large complex structure point:
///   D₁ = (3θ₁ − θ₀)θ₁ − 9u₁(3θ₁ + θ₀ + 2)(3θ₁ + θ₀ + 1) + u₀θ₁(3θ₂ + θ₀ + 1)
///   D₂ = the same with 1 ↔ 2
///   D₃ = θ₀² − u₀(3θ₁ + θ₀ + 1)(3θ₂ + θ₀ + 1)
std::vector<PfOperator> picard_fuchs_operators();

TrivariateSeries apply(const PfOperator& op, const TrivariateSeries& f);

/// The operator seen by functions of u₁, u₂ alone on u₀ = 0: terms carrying a
/// factor u₀ drop out and θ_{u₀} acts as zero.
PfOperator restrict_to_u0_zero(const PfOperator& op);

/// Copy of `op` with the sign of one term flipped (harness self-tests).
PfOperator with_flipped_term(const PfOperator& op, std::size_t term);

struct PfResidual {
  std::string operator_name;
  TrivariateSeries::Exponent monomial;
  Rational value;
};

struct PfReport {
  bool ok = true;
  unsigned max_degree = 0;
  std::vector<std::string> operators;
  std::optional<PfResidual> residual;  // first nonzero monomial, if any
};

/// Applies each operator to Ω^{(0)} truncated at total degree N + 1 and checks
/// that every monomial of total degree ≤ N vanishes. Requires N ≥ 2.
PfReport pf_check(unsigned N, std::span<const PfOperator> operators);
PfReport pf_check(unsigned N);

}  // namespace schoen::bmodel
