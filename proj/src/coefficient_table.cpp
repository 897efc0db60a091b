#include "schoen/coefficient_table.hpp"

#include <algorithm>

namespace schoen {

std::string to_string(TableLabel label) {
  switch (label) {
    case TableLabel::c: return "c";
    case TableLabel::a: return "a";
    case TableLabel::b: return "b";
  }
  return "?";
}

std::optional<std::size_t> first_mismatch(const std::vector<Integer>& lhs, const std::vector<Integer>& rhs) {
  std::size_t n = std::min(lhs.size(), rhs.size());
  for (std::size_t i = 0; i < n; ++i)
    if (lhs[i] != rhs[i]) return i;
  return std::nullopt;
}

}  // namespace schoen
