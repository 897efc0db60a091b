#pragma once

#include <cstddef>
#include <filesystem>
#include <optional>
#include <ostream>
#include <string>

#include "schoen/amodel.hpp"
#include "schoen/report.hpp"

namespace schoen::cli {

/// Reference order used when --order is not given.
inline constexpr std::size_t kDefaultOrder = 50;

/// c and a tables. With ThetaRoute::both the Jacobi and lattice c tables are
/// compared and a disagreement fails with CheckKind::route.
RunReport cmd_amodel(std::size_t order, amodel::ThetaRoute route);

/// b table; a fractional coefficient fails with CheckKind::integrality.
RunReport cmd_bmodel(std::size_t order);

struct VerifyOptions {
  std::size_t order = kDefaultOrder;
  std::optional<std::filesystem::path> golden_dir;
  bool regenerate_golden = false;
};

/// a (Jacobi route) against b, plus c, a, b against the golden files over
/// n ≤ min(order, 50). With regenerate_golden the files are rewritten from
/// the computed tables (only if a = b) and a diff goes to `diff_out`.
RunReport cmd_verify(const VerifyOptions& options, std::ostream& diff_out);

/// PF annihilation of Ω^{(0)} through total degree `degree` (≥ 2). If
/// `flip_operator` names D1, D2 or D3, that operator's last term has its sign
/// flipped first; used by the harness self-tests.
RunReport cmd_pf_check(unsigned degree, const std::optional<std::string>& flip_operator);

/// Θ^root multidegree buckets through level `qorder`, with two checks: level
/// totals against θ_{E8}(τ, 0), and the specialization against the Jacobi c
/// table on the coefficients it fully determines.
RunReport cmd_theta_root(int qorder);

}  // namespace schoen::cli
