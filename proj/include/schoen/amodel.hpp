#pragma once

#include <array>
#include <cstddef>
#include <vector>

#include "schoen/coefficient_table.hpp"
#include "schoen/numeric.hpp"

namespace schoen::amodel {

template <typename T>
using Matrix = std::vector<std::vector<T>>;

/// How c_n is computed: Jacobi theta combination, direct E8 enumeration, or
/// both with an equality check.
enum class ThetaRoute { jacobi, lattice, both };

/// c_0..c_N of Θ_{E8}(3t, tγ). With ThetaRoute::both the two routes must
/// agree or RouteMismatchError is thrown carrying the first differing index.
CoefficientTable c_series(std::size_t N, ThetaRoute route = ThetaRoute::both);

/// a_0..a_N of A^res(t) = Θ_{E8}(3t, tγ) · (Σ_k p(k) U^{3k})^{12}.
CoefficientTable a_series(std::size_t N, ThetaRoute route = ThetaRoute::jacobi);

/// A pseudo-section type: a section plus multiplicities k_i, k'_j on the
/// 12 + 12 singular I₁ fibres. The section itself does not affect counts.
struct PseudoSectionType {
  std::array<unsigned, 12> k{};
  std::array<unsigned, 12> kprime{};
};

/// n(μ) = ∏ p(k_i) · ∏ p(k'_j).
Integer pseudo_section_multiplicity(const PseudoSectionType& type);

/// n(σ, n, m) = [x^n](Σ p(k)x^k)^{12} · [x^m](Σ p(k)x^k)^{12}.
Integer pseudo_section_count(unsigned n, unsigned m);

/// Counts monomial ideals of C[x, y] of colength k by growing staircases
/// one box at a time. Limited to k ≤ 12.
Integer hilb_euler_oracle(unsigned k);

/// N_{1,n₁,n₂} = a_{n₁}·a_{n₂} for n₁ ≤ N1, n₂ ≤ N2.
Matrix<Integer> n1_matrix(std::size_t N1, std::size_t N2);

/// Coefficients of the pⁿ term of Σ_n (pⁿ/n³)·A^res(n t₁)·A^res(n t₂)
/// in U₁^{n₁}U₂^{n₂}, n₁, n₂ ≤ N.
struct PrepotentialSlice {
  std::size_t cover;  // n
  Rational prefactor;  // 1/n³
  Matrix<Rational> coefficients;
};

std::vector<PrepotentialSlice> prepotential_terms(std::size_t N, std::size_t k_max);

/// Classical couplings K_{ijk} on (J₀, J₁, J₂): K₀₁₂ = 9, K₁₁₂ = K₁₂₂ = 3 and
/// permutations; everything else vanishes.
long classical_coupling(unsigned i, unsigned j, unsigned k);

}  // namespace schoen::amodel
