#include <doctest.h>

#include <algorithm>
#include <functional>
#include <map>
#include <set>

#include "schoen/amodel.hpp"
#include "schoen/e8_lattice.hpp"
#include "schoen/jacobi_theta.hpp"
#include "schoen/partitions.hpp"
#include "test_support.hpp"

using namespace schoen;
using namespace schoen::lattice;

namespace {

// Partitions of n into parts no larger than `largest`, by plain recursion.
long brute_partitions(long n, long largest) {
  if (n == 0) return 1;
  long total = 0;
  for (long part = std::min(n, largest); part >= 1; --part) total += brute_partitions(n - part, part);
  return total;
}

long sigma3(long m) {
  long s = 0;
  for (long d = 1; d <= m; ++d)
    if (m % d == 0) s += d * d * d;
  return s;
}

// Coefficient of ζ^e in a ζ-series given by (exponent, sign) terms.
using TermFn = std::function<void(const std::function<void(long, long)>&)>;

void check_against_terms(const FractionalSeries& f, const TermFn& terms) {
  std::map<long, long> expected;
  terms([&](long exponent, long sign) {
    if (exponent <= f.precision()) expected[exponent] += sign;
  });
  for (long e = f.valuation; e <= f.precision(); ++e) {
    long want = expected.count(e) ? expected[e] : 0;
    CAPTURE(e);
    CHECK(f.coefficient(e) == want);
  }
}

}  // namespace

TEST_SUITE("partitions") {
  TEST_CASE("pentagonal recurrence equals brute-force enumeration for k <= 30") {
    auto p = partition_numbers(30);
    REQUIRE(p.size() == 31);
    for (long k = 0; k <= 30; ++k) CHECK(p[static_cast<std::size_t>(k)] == brute_partitions(k, k));
    CHECK(p[30] == 5604);
  }

  TEST_CASE("eta factor is the inverse twelfth power of the Euler product") {
    const std::size_t N = 24;
    for (std::size_t step : {1U, 3U}) {
      auto euler = TruncatedSeries<Integer>::one(N);
      for (std::size_t m = 1; m * step <= N; ++m) {
        std::vector<Integer> f(N + 1, Integer(0));
        f[0] = 1;
        f[m * step] = -1;
        euler = euler * TruncatedSeries<Integer>(std::move(f));
      }
      CHECK(eta_factor_power12(N, step) == series_pow_int(euler, -12));
    }
  }
}

TEST_SUITE("e8 lattice") {
  TEST_CASE("membership rule in doubled coordinates") {
    CHECK(E8Vector::is_lattice_point({2, 2, 0, 0, 0, 0, 0, 0}));
    CHECK(E8Vector::is_lattice_point({1, 1, 1, 1, 1, 1, 1, 1}));
    CHECK(E8Vector::is_lattice_point({1, 1, 1, 1, 1, 1, -1, -1}));
    CHECK_FALSE(E8Vector::is_lattice_point({1, 1, 1, 1, 1, 1, 1, -1}));
    CHECK_FALSE(E8Vector::is_lattice_point({2, 0, 0, 0, 0, 0, 0, 0}));
    CHECK_FALSE(E8Vector::is_lattice_point({1, 1, 0, 0, 0, 0, 0, 0}));
  }

  TEST_CASE("240 roots and the theta series of E8") {
    auto roots = e8_enumerate(2);
    CHECK(roots.size() == 241);
    std::size_t norm2 = 0;
    for (const auto& v : roots) norm2 += v.norm() == 2;
    CHECK(norm2 == 240);
    auto theta = e8_theta_series(4);
    CHECK(theta == test::to_integers({1, 240, 2160, 6720, 17520}));
    for (std::size_t m = 1; m <= 4; ++m) CHECK(theta[m] == 240 * sigma3(static_cast<long>(m)));
  }

  TEST_CASE("simple roots form the E8 Dynkin diagram") {
    auto alpha = simple_roots();
    int edges = 0;
    for (std::size_t i = 0; i < 8; ++i) {
      CHECK(alpha[i].norm() == 2);
      CHECK(E8Vector::is_lattice_point(alpha[i].doubled()));
      int degree = 0;
      for (std::size_t j = 0; j < 8; ++j) {
        if (i == j) continue;
        int p = alpha[i].pair(alpha[j]);
        CHECK((p == 0 || p == -1));
        degree += p == -1;
        if (j > i) edges += p == -1;
      }
      CHECK(degree <= 3);
    }
    CHECK(edges == 7);
    // γ = −2α₁ − α₂ + α₈.
    E8Vector::Coords combo{};
    for (std::size_t k = 0; k < 8; ++k)
      combo[k] = -2 * alpha[0].doubled()[k] - alpha[1].doubled()[k] + alpha[7].doubled()[k];
    CHECK(E8Vector(combo) == gamma_vector());
    CHECK(gamma_vector().norm() == 8);
  }

  TEST_CASE("shifted ball enumeration visits each point once") {
    std::set<E8Vector> seen;
    std::size_t visits = 0;
    for_each_in_shifted_ball(1, {}, 16, [&](const E8Vector& v) {
      ++visits;
      seen.insert(v);
    });
    CHECK(visits == seen.size());
    CHECK(visits == 2401);  // 1 + 240 + 2160
  }
}

TEST_SUITE("jacobi theta") {
  const std::size_t N = 6;

  TEST_CASE("theta 00 and 01 against the m-sum forms") {
    auto t00 = jacobi_theta_spec(ThetaKind::k00, N);
    CHECK(t00.valuation == 0);
    CHECK(t00.phase == 0);
    CHECK(t00.coefficient(0) == 1);
    check_against_terms(t00, [](const auto& emit) {
      for (long m = 1; m < 60; ++m)
        if (m % 3 != 0) emit(4 * m * m - 4, 1);
    });
    auto t01 = jacobi_theta_spec(ThetaKind::k01, N);
    check_against_terms(t01, [](const auto& emit) {
      for (long m = 1; m < 60; ++m)
        if (m % 3 != 0) emit(4 * m * m - 4, (m % 2 == 0) ? -1 : 1);
    });
  }

  TEST_CASE("theta 10 and the stripped theta 11 against the m-sum forms") {
    auto t10 = jacobi_theta_spec(ThetaKind::k10, N);
    CHECK(t10.valuation == -3);
    check_against_terms(t10, [](const auto& emit) {
      for (long m = 1; m < 60; ++m)
        if (m % 6 == 1 || m % 6 == 5) emit(m * m - 4, 1);
    });
    auto t11 = jacobi_theta_spec(ThetaKind::k11, N);
    CHECK(t11.valuation == -3);
    CHECK(t11.phase == 3);
    check_against_terms(t11, [](const auto& emit) {
      for (long m = 1; m < 60; ++m) {
        long r = m % 12;
        if (r == 1 || r == 11) emit(m * m - 4, 1);
        if (r == 5 || r == 7) emit(m * m - 4, -1);
      }
    });
  }

  TEST_CASE("every characteristic against the defining double sum") {
    // θ_{ab}(3t, t) = Σ_n e^{πi k b}·ζ^{9s² + 12s}, k = n + a/2, s = 2k.
    // For ab = 11 the phase e^{πi k} = i·(−1)^n; the stored phase is −i.
    auto sum = [](bool half, bool alternating, bool odd_phase) {
      return [=](const auto& emit) {
        for (long n = -40; n <= 40; ++n) {
          long s = 2 * n + (half ? 1 : 0);
          long sign = (alternating && n % 2 != 0) ? -1 : 1;
          if (odd_phase) sign = -sign;
          emit(9 * s * s + 12 * s, sign);
        }
      };
    };
    check_against_terms(jacobi_theta_spec(ThetaKind::k00, N), sum(false, false, false));
    check_against_terms(jacobi_theta_spec(ThetaKind::k01, N), sum(false, true, false));
    check_against_terms(jacobi_theta_spec(ThetaKind::k10, N), sum(true, false, false));
    check_against_terms(jacobi_theta_spec(ThetaKind::k11, N), sum(true, true, true));
  }

  TEST_CASE("fractional powers scale valuation and phase") {
    auto t11 = jacobi_theta_spec(ThetaKind::k11, 2);
    auto p = fractional_pow(t11, 8);
    CHECK(p.valuation == -24);
    CHECK(p.phase == 0);
    CHECK(p.coefficient(-24) == 1);
    CHECK(p.coefficient(0) == -8);
    CHECK_THROWS_AS(p.coefficient(p.precision() + 1), std::out_of_range);
  }
}

TEST_SUITE("restricted theta") {
  TEST_CASE("jacobi combination matches the golden c table") {
    auto c = theta_e8_restricted_jacobi(50);
    CHECK(c.values == test::golden_values(TableLabel::c));
    CHECK(c[12] == 8190);
    CHECK(c[50] == 458208);
  }

  TEST_CASE("lattice enumeration matches the jacobi combination") {
    for (std::size_t n : {0U, 1U, 4U, 20U}) {
      CAPTURE(n);
      CHECK(theta_e8_restricted_lattice(n).values == theta_e8_restricted_jacobi(n).values);
    }
  }

  TEST_CASE("c_0 counts the nine minimizers by hand") {
    // (3/2)Q + (σ, γ) = 0 for σ = 0 and the eight roots with (σ, γ) = −3.
    std::size_t count = 1;
    for (const auto& v : e8_enumerate(2))
      if (v.norm() == 2 && v.pair(gamma_vector()) == -3) ++count;
    CHECK(count == 9);
  }

  TEST_CASE("theta-root buckets reproduce the theta series and specialize to c") {
    for (int level : {2, 4, 6}) {
      CAPTURE(level);
      auto terms = theta_e8_root_multideg(level);
      std::vector<Integer> totals(static_cast<std::size_t>(level) + 1, Integer(0));
      for (const auto& t : terms) totals[static_cast<std::size_t>(t.level)] += t.count;
      CHECK(totals == e8_theta_series(static_cast<std::size_t>(level)));
      auto specialized = specialize_root_theta(terms, level);
      CHECK(specialized.size() == root_specialization_coverage(level));
      auto c = theta_e8_restricted_jacobi(50);
      for (std::size_t n = 0; n < specialized.size(); ++n) CHECK(specialized[n] == c[n]);
    }
    CHECK(root_specialization_coverage(0) == 0);
    CHECK(root_specialization_coverage(6) == 11);
  }
}
