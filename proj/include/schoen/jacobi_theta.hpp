#pragma once

#include <cstddef>
#include <string>

#include "schoen/coefficient_table.hpp"
#include "schoen/truncated_series.hpp"

namespace schoen::lattice {

/// Integer series in ζ with ζ^24 = U, times a unit i^phase and the monomial
/// ζ^valuation. Coefficient k of `series` belongs to ζ^{valuation + k}.
/// Valid up to (and including) ζ^{valuation + series.order()}.
struct FractionalSeries {
  static constexpr int kDenominator = 24;

  TruncatedSeries<Integer> series{0};
  int valuation = 0;
  int phase = 0;  // power of i, in 0..3

  /// Highest ζ-exponent the value is known to.
  long precision() const { return valuation + static_cast<long>(series.order()); }

  /// Coefficient of ζ^exponent (zero below the valuation); the exponent must
  /// not exceed precision().
  Integer coefficient(long exponent) const;
};

/// Which θ_{a,b}(3t, t).
enum class ThetaKind { k00, k01, k10, k11 };

std::string to_string(ThetaKind kind);

/// f^k; valuation and phase scale with k, relative precision is kept.
FractionalSeries fractional_pow(const FractionalSeries& f, unsigned k);

/// θ_{a,b}(3t, t) as a ζ-series, precise enough that its eighth power is
/// known through U^N. Kinds 00, 01 and 10 are summed from θ(τ, w) =
/// Σ_n exp(πi n²τ + 2πi n w) with the characteristic shifts; kind 11 comes
/// from the product −i·U^{−1/8}·∏_{m≥1}(1 − U^m), with the −i kept in
/// `phase` (phase 3) and the integer series stripped of it.
FractionalSeries jacobi_theta_spec(ThetaKind kind, std::size_t N);

/// c_0..c_N of Θ_{E8}(3t, tγ) = ½{θ₀₀⁸ + θ₀₁⁸ + θ₁₀⁸ − θ₁₁⁸}. Throws
/// std::logic_error if any surviving ζ-exponent is not a multiple of 24 or
/// the halving is inexact: either means the exponent bookkeeping is broken.
CoefficientTable theta_e8_restricted_jacobi(std::size_t N);

}  // namespace schoen::lattice
