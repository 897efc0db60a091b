// Runs the ten acceptance criteria and prints one PASS/FAIL line for each.
// Exit status is nonzero if any criterion fails.

#include <chrono>
#include <functional>
#include <iostream>
#include <sstream>
#include <string>

#include "schoen/amodel.hpp"
#include "schoen/bmodel.hpp"
#include "schoen/e8_lattice.hpp"
#include "schoen/partitions.hpp"
#include "schoen/picard_fuchs.hpp"
#include "test_support.hpp"

using namespace schoen;

namespace {

struct Outcome {
  bool pass = true;
  std::string detail;
};

class Timer {
 public:
  double seconds() const {
    return std::chrono::duration<double>(std::chrono::steady_clock::now() - start_).count();
  }

 private:
  std::chrono::steady_clock::time_point start_ = std::chrono::steady_clock::now();
};

std::string fmt_seconds(double s) {
  std::ostringstream out;
  out.precision(3);
  out << std::fixed << s << " s";
  return out.str();
}

Outcome compare(const std::vector<Integer>& got, const std::vector<Integer>& want, const std::string& what) {
  if (got.size() != want.size())
    return {false, what + ": " + std::to_string(got.size()) + " entries, expected " + std::to_string(want.size())};
  if (auto idx = first_mismatch(got, want))
    return {false, what + " differs at n=" + std::to_string(*idx) + ": " + got[*idx].get_str() + " vs " +
                       want[*idx].get_str()};
  return {true, what + ": " + std::to_string(got.size()) + " exact equalities"};
}

Outcome within(Outcome o, double seconds, double budget) {
  o.detail += ", " + fmt_seconds(seconds) + " (budget " + fmt_seconds(budget) + ")";
  if (seconds >= budget) o.pass = false;
  return o;
}

Outcome c_table() {
  Timer t;
  auto c = amodel::c_series(50, amodel::ThetaRoute::jacobi);
  double s = t.seconds();
  auto o = compare(c.values, test::golden_values(TableLabel::c), "c_0..c_50 (jacobi)");
  if (c[12] != 8190 || c[50] != 458208) o = {false, "spot values c_12, c_50 wrong"};
  return within(o, s, 1.0);
}

Outcome a_table() {
  Timer t;
  auto a = amodel::a_series(50);
  double s = t.seconds();
  auto o = compare(a.values, test::golden_values(TableLabel::a), "a_0..a_50");
  if (a[24] != Integer("166214205") || a[50] != Integer("3430694064888")) o = {false, "spot values a_24, a_50 wrong"};
  return within(o, s, 1.0);
}

Outcome b_table() {
  Timer t;
  auto b = bmodel::b_series(50);
  double s = t.seconds();
  return within(compare(b.values, test::golden_values(TableLabel::b), "b_0..b_50"), s, 30.0);
}

Outcome mirror() {
  auto a = amodel::a_series(50);
  auto b = bmodel::b_series(50);
  return compare(a.values, b.values, "a_n = b_n, n <= 50");
}

Outcome two_routes() {
  auto jacobi = amodel::c_series(50, amodel::ThetaRoute::jacobi);
  Timer t;
  auto lattice = amodel::c_series(50, amodel::ThetaRoute::lattice);
  double s = t.seconds();
  return within(compare(jacobi.values, lattice.values, "jacobi = lattice for c_0..c_50"), s, 60.0);
}

Outcome e8_sanity() {
  std::size_t roots = 0;
  for (const auto& v : lattice::e8_enumerate(2)) roots += v.norm() == 2;
  if (roots != 240) return {false, "found " + std::to_string(roots) + " roots"};
  auto o = compare(lattice::e8_theta_series(3), test::to_integers({1, 240, 2160, 6720}), "theta_E8 coefficients");
  o.detail = "240 roots; " + o.detail;
  return o;
}

Outcome harmonic_oracle() {
  auto phi0 = bmodel::phi0_dual(50);
  auto xi = bmodel::xi_dual(50);
  for (unsigned n = 0; n <= 50; ++n) {
    Integer f = factorial(n);
    Rational base(factorial(3 * n) / (f * f * f));
    auto g3n = bmodel::HarmonicValue::of(3 * n).value;
    auto gn = bmodel::HarmonicValue::of(n).value;
    if (phi0[n].deriv() != base * Rational(3) * (g3n - gn)) return {false, "phi0 eps-part differs at n=" + std::to_string(n)};
    if (xi[n].deriv() != base * g3n) return {false, "xi eps-part differs at n=" + std::to_string(n)};
  }
  return {true, "phi0 and xi eps-parts, n <= 50"};
}

Outcome pf_annihilation() {
  Timer t;
  auto report = bmodel::pf_check(6);
  double s = t.seconds();
  Outcome o{report.ok, "D1, D2, D3 through total degree 6"};
  if (!report.ok && report.residual)
    o.detail += "; residual " + report.residual->value.get_str() + " from " + report.residual->operator_name;
  return within(o, s, 10.0);
}

Outcome combinatorial() {
  auto p = lattice::partition_numbers(30);
  std::function<long(long, long)> brute = [&](long n, long largest) -> long {
    if (n == 0) return 1;
    long total = 0;
    for (long part = std::min(n, largest); part >= 1; --part) total += brute(n - part, part);
    return total;
  };
  for (long k = 0; k <= 30; ++k)
    if (p[static_cast<std::size_t>(k)] != brute(k, k)) return {false, "p(" + std::to_string(k) + ") differs"};
  for (unsigned k = 0; k <= 12; ++k)
    if (amodel::hilb_euler_oracle(k) != p[k]) return {false, "monomial ideals differ at k=" + std::to_string(k)};

  std::function<Integer(unsigned, unsigned)> tuples = [&](unsigned slots, unsigned remaining) -> Integer {
    if (slots == 0) return remaining == 0 ? Integer(1) : Integer(0);
    Integer total = 0;
    for (unsigned k = 0; k <= remaining; ++k) total += p[k] * tuples(slots - 1, remaining - k);
    return total;
  };
  for (unsigned n = 0; n <= 4; ++n)
    for (unsigned m = 0; m <= 4; ++m)
      if (amodel::pseudo_section_count(n, m) != tuples(12, n) * tuples(12, m))
        return {false, "pseudo-section count differs at (" + std::to_string(n) + "," + std::to_string(m) + ")"};
  return {true, "p(k) k<=30, monomial ideals k<=12, 12-tuples n,m<=4"};
}

Outcome structural() {
  if (!bmodel::n0_vanishing_check(20, 20)) return {false, "N_0 mixed term nonzero below (20,20)"};
  try {
    auto n1 = bmodel::p0_first_order(15, 15);
    auto a = amodel::a_series(15);
    for (std::size_t i = 0; i <= 15; ++i)
      for (std::size_t j = 0; j <= 15; ++j)
        if (n1[i][j] != a[i] * a[j]) return {false, "N_1 differs from a_i a_j at (" + std::to_string(i) + "," +
                                                        std::to_string(j) + ")"};
  } catch (const std::exception& e) {
    return {false, e.what()};
  }
  return {true, "N_0 = 0 through (20,20); N_1 routes agree through (15,15)"};
}

}  // namespace

int main() {
  const std::pair<const char*, Outcome (*)()> criteria[] = {
      {"c table reproduction", c_table},
      {"a table reproduction", a_table},
      {"b-series reproduction", b_table},
      {"mirror check a = b", mirror},
      {"two-route theta equality", two_routes},
      {"E8 sanity", e8_sanity},
      {"harmonic-formula oracle", harmonic_oracle},
      {"PF annihilation", pf_annihilation},
      {"combinatorial oracles", combinatorial},
      {"structural properties", structural},
  };
  int failures = 0;
  int index = 1;
  for (const auto& [name, run] : criteria) {
    Outcome o;
    try {
      o = run();
    } catch (const std::exception& e) {
      o = {false, std::string("exception: ") + e.what()};
    }
    failures += o.pass ? 0 : 1;
    std::cout << (o.pass ? "PASS" : "FAIL") << "  criterion " << index++ << " (" << name << "): " << o.detail
              << std::endl;
  }
  std::cout << (failures == 0 ? "all criteria pass" : std::to_string(failures) + " criteria fail") << std::endl;
  return failures == 0 ? 0 : 1;
}
