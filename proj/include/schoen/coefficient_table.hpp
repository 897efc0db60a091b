#pragma once

#include <cstddef>
#include <optional>
#include <string>
#include <vector>

#include "schoen/numeric.hpp"

namespace schoen {

/// Which generating function a table holds: c (restricted E8 theta),
/// a (A-model series), b (B-model instanton series).
enum class TableLabel { c, a, b };

std::string to_string(TableLabel label);

/// Ordered exact integer sequence v_0..v_order with a note on how it was
/// produced. The unit of comparison for golden files and cross-checks.
struct CoefficientTable {
  TableLabel label;
  std::vector<Integer> values;
  std::string provenance;

  std::size_t order() const { return values.empty() ? 0 : values.size() - 1; }
  const Integer& operator[](std::size_t n) const { return values.at(n); }
};

/// First index where two tables differ over their common range, if any.
std::optional<std::size_t> first_mismatch(const std::vector<Integer>& lhs, const std::vector<Integer>& rhs);

}  // namespace schoen
