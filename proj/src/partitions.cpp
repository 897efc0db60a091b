#include "schoen/partitions.hpp"

#include <stdexcept>

namespace schoen::lattice {

std::vector<Integer> partition_numbers(std::size_t N) {
  std::vector<Integer> p(N + 1, Integer(0));
  p[0] = 1;
  for (std::size_t n = 1; n <= N; ++n) {
    Integer acc = 0;
    for (std::size_t k = 1;; ++k) {
      std::size_t g1 = k * (3 * k - 1) / 2;
      if (g1 > n) break;
      std::size_t g2 = k * (3 * k + 1) / 2;
      if (k % 2 == 1) {
        acc += p[n - g1];
        if (g2 <= n) acc += p[n - g2];
      } else {
        acc -= p[n - g1];
        if (g2 <= n) acc -= p[n - g2];
      }
    }
    p[n] = acc;
  }
  return p;
}

TruncatedSeries<Integer> eta_factor_power12(std::size_t N, std::size_t step) {
  if (step == 0) throw std::invalid_argument("eta_factor_power12: step must be positive");
  auto p = partition_numbers(N / step);
  std::vector<Integer> coeffs(N + 1, Integer(0));
  for (std::size_t k = 0; k * step <= N; ++k) coeffs[k * step] = p[k];
  return series_pow_int(TruncatedSeries<Integer>(std::move(coeffs)), 12);
}

}  // namespace schoen::lattice
