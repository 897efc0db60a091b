#include "schoen/report.hpp"

#include <algorithm>
#include <iomanip>
#include <sstream>

#include <json.hpp>

namespace schoen::cli {

int exit_code_for(CheckKind kind) {
  switch (kind) {
    case CheckKind::mirror:
    case CheckKind::golden: return kMirrorMismatch;
    case CheckKind::route: return kRouteMismatch;
    case CheckKind::integrality: return kIntegrality;
    case CheckKind::pf_residual: return kPfResidual;
  }
  return kMirrorMismatch;
}

namespace {

std::string to_string(CheckKind kind) {
  switch (kind) {
    case CheckKind::mirror: return "mirror";
    case CheckKind::golden: return "golden";
    case CheckKind::route: return "route";
    case CheckKind::integrality: return "integrality";
    case CheckKind::pf_residual: return "pf_residual";
  }
  return "unknown";
}

std::string failure_line(const CheckResult& c) {
  std::ostringstream out;
  if (c.first_mismatch) out << "first mismatch at n=" << *c.first_mismatch << ": ";
  out << c.lhs_label << " " << c.lhs_value << ", " << c.rhs_label << " " << c.rhs_value;
  if (!c.detail.empty()) out << " (" << c.detail << ")";
  return out.str();
}

std::string csv_field(const std::string& s) {
  if (s.find_first_of(",\"\n") == std::string::npos) return s;
  std::string out = "\"";
  for (char ch : s) {
    if (ch == '"') out += '"';
    out += ch;
  }
  return out + "\"";
}

nlohmann::ordered_json canonical_json(const RunReport& r) {
  using nlohmann::ordered_json;
  ordered_json j;
  j["command"] = r.command;
  j["order"] = r.order;
  j["notes"] = r.notes;
  j["tables"] = ordered_json::array();
  for (const auto& t : r.tables) {
    ordered_json values = ordered_json::array();
    for (const auto& v : t.values) values.push_back(v.get_str());
    j["tables"].push_back({{"label", to_string(t.label)}, {"order", t.order()}, {"provenance", t.provenance},
                           {"values", values}});
  }
  j["sections"] = ordered_json::array();
  for (const auto& s : r.sections) j["sections"].push_back({{"name", s.name}, {"columns", s.columns}, {"rows", s.rows}});
  j["checks"] = ordered_json::array();
  for (const auto& c : r.checks) {
    ordered_json cj{{"name", c.name}, {"kind", to_string(c.kind)}, {"pass", c.pass}};
    if (c.pass) {
      cj["first_mismatch"] = nullptr;
    } else {
      cj["first_mismatch"] = c.first_mismatch ? ordered_json(*c.first_mismatch) : ordered_json(nullptr);
      cj["lhs"] = {{"label", c.lhs_label}, {"value", c.lhs_value}};
      cj["rhs"] = {{"label", c.rhs_label}, {"value", c.rhs_value}};
      if (!c.detail.empty()) cj["detail"] = c.detail;
    }
    j["checks"].push_back(std::move(cj));
  }
  j["status"] = r.all_passed() ? "pass" : "fail";
  j["exit_code"] = r.exit_code();
  return j;
}

std::string render_human(const RunReport& r) {
  std::ostringstream out;
  out << "command: " << r.command << "\norder: " << r.order << "\n";
  for (const auto& n : r.notes) out << "note: " << n << "\n";
  for (const auto& t : r.tables) {
    out << "\ntable " << to_string(t.label) << " (" << t.provenance << ")\n";
    std::size_t width = 1;
    for (const auto& v : t.values) width = std::max(width, v.get_str().size());
    for (std::size_t n = 0; n < t.values.size(); ++n)
      out << std::setw(4) << n << "  " << std::setw(static_cast<int>(width)) << t.values[n].get_str() << "\n";
  }
  for (const auto& s : r.sections) {
    out << "\n" << s.name << "\n";
    for (std::size_t i = 0; i < s.columns.size(); ++i) out << (i ? "\t" : "") << s.columns[i];
    out << "\n";
    for (const auto& row : s.rows) {
      for (std::size_t i = 0; i < row.size(); ++i) out << (i ? "\t" : "") << row[i];
      out << "\n";
    }
  }
  out << "\nchecks:\n";
  for (const auto& c : r.checks) {
    out << "  " << (c.pass ? "PASS" : "FAIL") << "  " << c.name;
    if (!c.pass) out << ": " << failure_line(c);
    out << "\n";
  }
  out << "status: " << (r.all_passed() ? "pass" : "fail") << " (exit " << r.exit_code() << ")\n";
  return out.str();
}

std::string render_csv(const RunReport& r) {
  std::ostringstream out;
  out << "record,name,index,value,detail\n";
  out << "meta,command,," << csv_field(r.command) << ",\n";
  out << "meta,order,," << r.order << ",\n";
  for (const auto& n : r.notes) out << "meta,note,," << csv_field(n) << ",\n";
  for (const auto& t : r.tables)
    for (std::size_t n = 0; n < t.values.size(); ++n)
      out << "table," << to_string(t.label) << "," << n << "," << t.values[n].get_str() << ",\n";
  for (const auto& s : r.sections)
    for (std::size_t i = 0; i < s.rows.size(); ++i) {
      std::string joined;
      for (std::size_t k = 0; k < s.rows[i].size(); ++k) joined += (k ? " " : "") + s.columns.at(k) + "=" + s.rows[i][k];
      out << "section," << csv_field(s.name) << "," << i << "," << csv_field(joined) << ",\n";
    }
  for (const auto& c : r.checks) {
    out << "check," << csv_field(c.name) << ",";
    if (c.first_mismatch) out << *c.first_mismatch;
    out << "," << (c.pass ? "PASS" : "FAIL") << "," << (c.pass ? "" : csv_field(failure_line(c))) << "\n";
  }
  out << "meta,status,," << (r.all_passed() ? "pass" : "fail") << ",\n";
  return out.str();
}

}  // namespace

bool RunReport::all_passed() const {
  return std::all_of(checks.begin(), checks.end(), [](const CheckResult& c) { return c.pass; });
}

int RunReport::exit_code() const {
  for (const auto& c : checks)
    if (!c.pass) return exit_code_for(c.kind);
  return kOk;
}

CheckResult compare_sequences(std::string name, CheckKind kind, const std::string& lhs_label,
                              const std::vector<Integer>& lhs, const std::string& rhs_label,
                              const std::vector<Integer>& rhs) {
  CheckResult result{.name = std::move(name), .kind = kind};
  auto index = first_mismatch(lhs, rhs);
  if (!index) return result;
  result.pass = false;
  result.first_mismatch = index;
  result.lhs_label = lhs_label;
  result.lhs_value = lhs.at(*index).get_str();
  result.rhs_label = rhs_label;
  result.rhs_value = rhs.at(*index).get_str();
  return result;
}

std::optional<OutputFormat> parse_format(const std::string& name) {
  if (name == "human") return OutputFormat::human;
  if (name == "json") return OutputFormat::json;
  if (name == "csv") return OutputFormat::csv;
  return std::nullopt;
}

std::string render_canonical(const RunReport& report, OutputFormat format) {
  switch (format) {
    case OutputFormat::human: return render_human(report);
    case OutputFormat::csv: return render_csv(report);
    case OutputFormat::json: return canonical_json(report).dump(2) + "\n";
  }
  return {};
}

std::string render(const RunReport& report, OutputFormat format) {
  switch (format) {
    case OutputFormat::human: return render_human(report) + "wall_time_ms: " + std::to_string(report.wall_time_ms) + "\n";
    case OutputFormat::csv:
      return render_csv(report) + "timing,wall_time_ms,," + std::to_string(report.wall_time_ms) + ",\n";
    case OutputFormat::json: {
      nlohmann::ordered_json j{{"canonical", canonical_json(report)},
                               {"timing", {{"wall_time_ms", report.wall_time_ms}}}};
      return j.dump(2) + "\n";
    }
  }
  return {};
}

}  // namespace schoen::cli
