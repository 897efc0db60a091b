#pragma once

#include <filesystem>
#include <optional>
#include <string>
#include <vector>

#include "schoen/coefficient_table.hpp"

namespace schoen::golden {

/// Environment variable naming the directory that holds the golden files.
inline constexpr const char* kDirEnv = "SCHOEN_GOLDEN_DIR";

/// Reference table order shipped with the project.
inline constexpr std::size_t kReferenceOrder = 50;

/// Resolution order: explicit override, then $SCHOEN_GOLDEN_DIR, then the
/// directory compiled in at build time.
std::filesystem::path resolve_dir(const std::optional<std::filesystem::path>& override_dir);

/// table1_c.txt, table2_a.txt or b_expand.txt.
std::string file_name(TableLabel label);

/// One decimal integer per line; blank lines and lines starting with '#' are
/// skipped. Throws std::runtime_error naming the file and line on bad input.
std::vector<Integer> read(const std::filesystem::path& file);

void write(const std::filesystem::path& file, const std::vector<Integer>& values);

/// Line-oriented diff of two sequences: "n: old -> new" for every changed
/// index, "+n: new" / "-n: old" past the shorter one. Empty when identical.
std::string diff(const std::vector<Integer>& before, const std::vector<Integer>& after);

}  // namespace schoen::golden
