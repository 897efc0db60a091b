#pragma once

#include <array>
#include <compare>
#include <cstddef>
#include <functional>
#include <vector>

#include "schoen/coefficient_table.hpp"
#include "schoen/numeric.hpp"

namespace schoen::lattice {

/// Point of E8 = D8 ∪ (D8 + s₀) ⊂ R⁸, stored as twice its coordinates so the
/// spinor coset stays integral. Valid vectors have all doubled coordinates
/// even or all odd, with the doubled coordinate sum divisible by 4.
class E8Vector {
 public:
  using Coords = std::array<int, 8>;

  constexpr E8Vector() = default;
  constexpr explicit E8Vector(const Coords& doubled) : doubled_(doubled) {}

  static bool is_lattice_point(const Coords& doubled);

  const Coords& doubled() const { return doubled_; }

  /// Q(σ) = (σ, σ); even for every lattice point.
  int norm() const;

  /// Standard inner product (σ, τ); integral on E8.
  int pair(const E8Vector& other) const;

  friend auto operator<=>(const E8Vector&, const E8Vector&) = default;

 private:
  Coords doubled_{};
};

/// γ = (1, 1, 1, 1, 1, 1, 1, −1), the pairing vector of the restricted theta.
E8Vector gamma_vector();

/// Simple roots α₁..α₈ of the fixed embedding:
/// α₁ = ½(ε₁ + ε₈) − ½(ε₂ + ⋯ + ε₇), α_k = ε_k − ε_{k−1} (k = 2..7), α₈ = ε₁ + ε₂.
std::array<E8Vector, 8> simple_roots();

/// Visits every lattice point y (doubled coordinates) with
/// Σ_i (scale·y_i + shift_i)² ≤ bound, by coordinate descent that prunes on
/// the partial sum. Visit order is lexicographic in the doubled coordinates.
void for_each_in_shifted_ball(int scale, const std::array<int, 8>& shift, long bound,
                              const std::function<void(const E8Vector&)>& visit);

/// All vectors with Q(σ) ≤ max_norm, sorted.
std::vector<E8Vector> e8_enumerate(int max_norm);

/// Coefficients of θ_{E8}(τ, 0) = Σ_m #{Q(σ) = 2m} q^m for m ≤ N.
std::vector<Integer> e8_theta_series(std::size_t N);

/// c_m = #{σ ∈ E8 : (3/2)Q(σ) + (σ, γ) = m} for m ≤ N, by direct enumeration.
/// (3/2)Q(σ) + (σ, γ) ≤ N is equivalent to |σ + γ/3|² ≤ (2/3)(N + 4/3), so
/// the enumeration is a ball around −γ/3 and visits no vector twice.
CoefficientTable theta_e8_restricted_lattice(std::size_t N);

/// One bucket of Θ^root: the lattice vectors at level Q/2 = level whose
/// pairings with α₁..α₈ are `pairing`.
struct RootThetaTerm {
  int level;
  std::array<int, 8> pairing;
  Integer count;

  friend bool operator==(const RootThetaTerm&, const RootThetaTerm&) = default;
};

/// Θ^root_{E8}(τ, z₁..z₈) truncated at q^{max_level}, grouped by
/// (level, (B(σ, α₁), …, B(σ, α₈))). Sorted by level then pairing.
std::vector<RootThetaTerm> theta_e8_root_multideg(int max_level);

/// Number of leading coefficients c_0, c_1, … of Θ_{E8}(3t, tγ) that only
/// receive contributions from levels ≤ max_level; uses |(σ, γ)| ≤ √(16·level).
std::size_t root_specialization_coverage(int max_level);

/// Specializes Θ^root at τ → 3t, Σ z_j α_j → tγ using γ = −2α₁ − α₂ + α₈.
/// Returns the root_specialization_coverage(max_level) leading coefficients.
std::vector<Integer> specialize_root_theta(const std::vector<RootThetaTerm>& terms, int max_level);

}  // namespace schoen::lattice
