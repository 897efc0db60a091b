#include "schoen/commands.hpp"

#include <algorithm>
#include <chrono>
#include <sstream>
#include <stdexcept>

#include "schoen/bmodel.hpp"
#include "schoen/e8_lattice.hpp"
#include "schoen/errors.hpp"
#include "schoen/golden.hpp"
#include "schoen/picard_fuchs.hpp"

namespace schoen::cli {

namespace {

class Stopwatch {
 public:
  long long elapsed_ms() const {
    return std::chrono::duration_cast<std::chrono::milliseconds>(std::chrono::steady_clock::now() - start_).count();
  }

 private:
  std::chrono::steady_clock::time_point start_ = std::chrono::steady_clock::now();
};

RunReport start_report(std::string command, std::size_t order) {
  RunReport report{.command = std::move(command), .order = order};
  if (order > golden::kReferenceOrder)
    report.notes.push_back("order " + std::to_string(order) + " extends the reference tables (n <= " +
                           std::to_string(golden::kReferenceOrder) + ")");
  return report;
}

CheckResult integrality_failure(const IntegralityError& e) {
  CheckResult c{.name = "b coefficients are integers", .kind = CheckKind::integrality, .pass = false};
  c.first_mismatch = static_cast<std::size_t>(std::max(0L, e.index()));
  c.lhs_label = "computed";
  c.lhs_value = e.value().empty() ? "non-integer" : e.value();
  c.rhs_label = "required";
  c.rhs_value = "an integer";
  c.detail = e.what();
  return c;
}

// Golden comparison over n ≤ min(order, reference order). A file that is
// missing, unreadable or too short fails at the first index it cannot supply.
CheckResult golden_check(const CoefficientTable& computed, const std::filesystem::path& dir) {
  const std::string name = "golden " + to_string(computed.label) + " (" + golden::file_name(computed.label) + ")";
  const std::size_t span = std::min(computed.order(), golden::kReferenceOrder) + 1;
  std::vector<Integer> expected;
  std::string problem;
  try {
    expected = golden::read(dir / golden::file_name(computed.label));
  } catch (const std::exception& e) {
    problem = e.what();
  }
  if (problem.empty() && expected.size() >= span) {
    std::vector<Integer> prefix(computed.values.begin(), computed.values.begin() + static_cast<long>(span));
    expected.resize(span);
    return compare_sequences(name, CheckKind::golden, "computed", prefix, "golden", expected);
  }
  CheckResult c{.name = name, .kind = CheckKind::golden, .pass = false};
  c.first_mismatch = problem.empty() ? expected.size() : 0;
  c.lhs_label = "computed";
  c.lhs_value = computed[*c.first_mismatch].get_str();
  c.rhs_label = "golden";
  c.rhs_value = "missing";
  c.detail = problem.empty() ? "golden file has only " + std::to_string(expected.size()) + " entries" : problem;
  return c;
}

}  // namespace

RunReport cmd_amodel(std::size_t order, amodel::ThetaRoute route) {
  Stopwatch clock;
  auto report = start_report("amodel", order);
  if (route == amodel::ThetaRoute::both) {
    auto jacobi = amodel::c_series(order, amodel::ThetaRoute::jacobi);
    auto lattice = amodel::c_series(order, amodel::ThetaRoute::lattice);
    report.checks.push_back(compare_sequences("c: jacobi route = lattice route", CheckKind::route, "jacobi",
                                              jacobi.values, "lattice", lattice.values));
    report.tables.push_back(std::move(jacobi));
    report.tables.push_back(amodel::a_series(order, amodel::ThetaRoute::jacobi));
  } else {
    report.tables.push_back(amodel::c_series(order, route));
    report.tables.push_back(amodel::a_series(order, route));
  }
  report.wall_time_ms = clock.elapsed_ms();
  return report;
}

RunReport cmd_bmodel(std::size_t order) {
  Stopwatch clock;
  auto report = start_report("bmodel", order);
  try {
    report.tables.push_back(bmodel::b_series(order));
    report.checks.push_back({.name = "b coefficients are integers", .kind = CheckKind::integrality});
  } catch (const IntegralityError& e) {
    report.checks.push_back(integrality_failure(e));
  }
  report.wall_time_ms = clock.elapsed_ms();
  return report;
}

RunReport cmd_verify(const VerifyOptions& options, std::ostream& diff_out) {
  Stopwatch clock;
  auto report = start_report("verify", options.order);
  auto c = amodel::c_series(options.order, amodel::ThetaRoute::jacobi);
  auto a = amodel::a_series(options.order, amodel::ThetaRoute::jacobi);
  std::optional<CoefficientTable> b;
  try {
    b = bmodel::b_series(options.order);
  } catch (const IntegralityError& e) {
    report.checks.push_back(integrality_failure(e));
  }

  const auto dir = golden::resolve_dir(options.golden_dir);
  if (b) {
    auto mirror = compare_sequences("mirror: a = b", CheckKind::mirror, "a", a.values, "b", b->values);
    if (options.regenerate_golden) {
      if (!mirror.pass || options.order < golden::kReferenceOrder) {
        report.notes.push_back("golden files not regenerated: requires a passing mirror check at order >= " +
                               std::to_string(golden::kReferenceOrder));
      } else {
        for (const auto* table : {&c, &a, &*b}) {
          const auto file = dir / golden::file_name(table->label);
          std::vector<Integer> before;
          try {
            before = golden::read(file);
          } catch (const std::exception&) {
          }
          std::vector<Integer> after(table->values.begin(),
                                     table->values.begin() + static_cast<long>(golden::kReferenceOrder + 1));
          auto delta = golden::diff(before, after);
          diff_out << "regenerated " << file.string() << (delta.empty() ? " (unchanged)\n" : ":\n") << delta;
          golden::write(file, after);
        }
        report.notes.push_back("golden files regenerated in " + dir.string());
      }
    }
    report.checks.push_back(std::move(mirror));
  }
  report.checks.push_back(golden_check(c, dir));
  report.checks.push_back(golden_check(a, dir));
  if (b) report.checks.push_back(golden_check(*b, dir));

  report.tables.push_back(std::move(a));
  if (b) report.tables.push_back(std::move(*b));
  report.wall_time_ms = clock.elapsed_ms();
  return report;
}

RunReport cmd_pf_check(unsigned degree, const std::optional<std::string>& flip_operator) {
  if (degree < 2) throw std::invalid_argument("pf-check: degree must be at least 2");
  Stopwatch clock;
  auto report = start_report("pf-check", degree);
  auto ops = bmodel::picard_fuchs_operators();
  if (flip_operator) {
    auto it = std::find_if(ops.begin(), ops.end(), [&](const auto& op) { return op.name == *flip_operator; });
    if (it == ops.end()) throw std::invalid_argument("pf-check: unknown operator " + *flip_operator);
    *it = bmodel::with_flipped_term(*it, it->terms.size() - 1);
    report.notes.push_back("fixture: last term of " + *flip_operator + " has its sign flipped");
  }
  auto result = bmodel::pf_check(degree, ops);

  std::string names;
  for (const auto& n : result.operators) names += (names.empty() ? "" : ",") + n;
  CheckResult check{.name = names + " annihilate Omega0 through total degree " + std::to_string(degree),
                    .kind = CheckKind::pf_residual,
                    .pass = result.ok};
  if (!result.ok && result.residual) {
    const auto& r = *result.residual;
    std::ostringstream where;
    where << "u^(" << r.monomial[0] << "," << r.monomial[1] << "," << r.monomial[2] << ")";
    check.first_mismatch = r.monomial[0] + r.monomial[1] + r.monomial[2];
    check.lhs_label = r.operator_name + " Omega0 at " + where.str();
    check.lhs_value = r.value.get_str();
    check.rhs_label = "expected";
    check.rhs_value = "0";
    check.detail = "index is the total degree of the first nonzero monomial";
  }
  report.checks.push_back(std::move(check));
  report.wall_time_ms = clock.elapsed_ms();
  return report;
}

RunReport cmd_theta_root(int qorder) {
  if (qorder < 0) throw std::invalid_argument("theta-root: qorder must be non-negative");
  Stopwatch clock;
  auto report = start_report("theta-root", static_cast<std::size_t>(qorder));
  auto terms = lattice::theta_e8_root_multideg(qorder);

  ReportSection dump{.name = "theta-root multidegrees", .columns = {"level", "pairing", "count"}};
  std::vector<Integer> level_totals(static_cast<std::size_t>(qorder) + 1, Integer(0));
  for (const auto& t : terms) {
    std::string pairing;
    for (std::size_t j = 0; j < t.pairing.size(); ++j) pairing += (j ? " " : "") + std::to_string(t.pairing[j]);
    dump.rows.push_back({std::to_string(t.level), pairing, t.count.get_str()});
    level_totals.at(static_cast<std::size_t>(t.level)) += t.count;
  }
  report.sections.push_back(std::move(dump));

  report.checks.push_back(compare_sequences("level totals = theta_E8(q, 0)", CheckKind::route, "root buckets",
                                            level_totals, "enumeration",
                                            lattice::e8_theta_series(static_cast<std::size_t>(qorder))));

  auto specialized = lattice::specialize_root_theta(terms, qorder);
  if (!specialized.empty()) {
    auto c = amodel::c_series(specialized.size() - 1, amodel::ThetaRoute::jacobi);
    report.checks.push_back(compare_sequences(
        "specialization = c through n = " + std::to_string(specialized.size() - 1), CheckKind::route,
        "theta-root", specialized, "jacobi", c.values));
    report.tables.push_back({TableLabel::c, std::move(specialized), "theta-root specialized at tau=3t, z=t gamma"});
  }
  report.wall_time_ms = clock.elapsed_ms();
  return report;
}

}  // namespace schoen::cli
