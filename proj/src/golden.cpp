#include "schoen/golden.hpp"

#include <cstdlib>
#include <fstream>
#include <sstream>
#include <stdexcept>

#ifndef SCHOEN_DEFAULT_GOLDEN_DIR
#define SCHOEN_DEFAULT_GOLDEN_DIR "data/golden"
#endif

namespace schoen::golden {

std::filesystem::path resolve_dir(const std::optional<std::filesystem::path>& override_dir) {
  if (override_dir) return *override_dir;
  if (const char* env = std::getenv(kDirEnv); env != nullptr && *env != '\0') return env;
  return SCHOEN_DEFAULT_GOLDEN_DIR;
}

std::string file_name(TableLabel label) {
  switch (label) {
    case TableLabel::c: return "table1_c.txt";
    case TableLabel::a: return "table2_a.txt";
    case TableLabel::b: return "b_expand.txt";
  }
  throw std::invalid_argument("golden::file_name: unknown label");
}

std::vector<Integer> read(const std::filesystem::path& file) {
  std::ifstream in(file);
  if (!in) throw std::runtime_error("cannot open golden file " + file.string());
  std::vector<Integer> values;
  std::string line;
  for (std::size_t lineno = 1; std::getline(in, line); ++lineno) {
    auto first = line.find_first_not_of(" \t\r");
    if (first == std::string::npos || line[first] == '#') continue;
    auto last = line.find_last_not_of(" \t\r");
    std::string token = line.substr(first, last - first + 1);
    Integer v;
    if (v.set_str(token, 10) != 0)
      throw std::runtime_error(file.string() + ":" + std::to_string(lineno) + ": not an integer: " + token);
    values.push_back(std::move(v));
  }
  return values;
}

void write(const std::filesystem::path& file, const std::vector<Integer>& values) {
  std::ofstream out(file, std::ios::trunc);
  if (!out) throw std::runtime_error("cannot write golden file " + file.string());
  for (const auto& v : values) out << v.get_str() << "\n";
}

std::string diff(const std::vector<Integer>& before, const std::vector<Integer>& after) {
  std::ostringstream out;
  const std::size_t common = std::min(before.size(), after.size());
  for (std::size_t n = 0; n < common; ++n)
    if (before[n] != after[n]) out << n << ": " << before[n].get_str() << " -> " << after[n].get_str() << "\n";
  for (std::size_t n = common; n < after.size(); ++n) out << "+" << n << ": " << after[n].get_str() << "\n";
  for (std::size_t n = common; n < before.size(); ++n) out << "-" << n << ": " << before[n].get_str() << "\n";
  return out.str();
}

}  // namespace schoen::golden
