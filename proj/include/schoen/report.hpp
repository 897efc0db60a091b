#pragma once

#include <cstddef>
#include <optional>
#include <string>
#include <vector>

#include "schoen/coefficient_table.hpp"

namespace schoen::cli {

/// Process exit codes.
enum ExitCode : int {
  kOk = 0,
  kMirrorMismatch = 1,
  kRouteMismatch = 2,
  kIntegrality = 3,
  kPfResidual = 4,
  kUsage = 64,
};

/// What a failing check means for the exit code.
enum class CheckKind { mirror, golden, route, integrality, pf_residual };

int exit_code_for(CheckKind kind);

struct CheckResult {
  std::string name;
  CheckKind kind = CheckKind::mirror;
  bool pass = true;
  // Set on failure: where the two sides first differ and what each side held.
  std::optional<std::size_t> first_mismatch;
  std::string lhs_label;
  std::string lhs_value;
  std::string rhs_label;
  std::string rhs_value;
  std::string detail;
};

/// Free-form tabular dump attached to a report (lattice multidegree data).
struct ReportSection {
  std::string name;
  std::vector<std::string> columns;
  std::vector<std::vector<std::string>> rows;
};

struct RunReport {
  std::string command;
  std::size_t order = 0;
  std::vector<std::string> notes;
  std::vector<CoefficientTable> tables;
  std::vector<ReportSection> sections;
  std::vector<CheckResult> checks;
  long long wall_time_ms = 0;

  bool all_passed() const;
  /// Exit code of the first failing check, kOk if none fail.
  int exit_code() const;
};

/// Compares two integer sequences over their common range. On failure the
/// result carries the first differing index and both values.
CheckResult compare_sequences(std::string name, CheckKind kind, const std::string& lhs_label,
                              const std::vector<Integer>& lhs, const std::string& rhs_label,
                              const std::vector<Integer>& rhs);

enum class OutputFormat { human, json, csv };

std::optional<OutputFormat> parse_format(const std::string& name);

/// The deterministic part of the report. Wall time is never included.
std::string render_canonical(const RunReport& report, OutputFormat format);

/// Canonical section plus timing. For json the timing sits in a separate
/// top-level "timing" object; for human and csv it is a trailing line.
std::string render(const RunReport& report, OutputFormat format);

}  // namespace schoen::cli
