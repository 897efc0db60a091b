#pragma once

#include <cstddef>
#include <vector>

#include "schoen/numeric.hpp"
#include "schoen/truncated_series.hpp"

namespace schoen::lattice {

/// p(0..N) via Euler's pentagonal-number recurrence
/// p(n) = Σ_{k≥1} (−1)^{k+1} [p(n − k(3k−1)/2) + p(n − k(3k+1)/2)].
std::vector<Integer> partition_numbers(std::size_t N);

/// ∏_{m≥1} (1 − U^{step·m})^{−12} = (Σ_k p(k) U^{step·k})^{12}, truncated at U^N.
TruncatedSeries<Integer> eta_factor_power12(std::size_t N, std::size_t step);

}  // namespace schoen::lattice
