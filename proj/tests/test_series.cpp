#include <doctest.h>

#include "schoen/bi_nilpotent.hpp"
#include "schoen/bivariate_series.hpp"
#include "schoen/dual_scalar.hpp"
#include "schoen/errors.hpp"
#include "schoen/trivariate_series.hpp"
#include "schoen/truncated_series.hpp"
#include "test_support.hpp"

using namespace schoen;
using schoen::test::random_rational;
using schoen::test::random_series;
using schoen::test::Rng;
using QSeries = TruncatedSeries<Rational>;
using ZSeries = TruncatedSeries<Integer>;

TEST_SUITE("series-core") {
  TEST_CASE("binary operations keep the smaller order") {
    ZSeries a(std::vector<Integer>{1, 2, 3, 4});
    ZSeries b(std::vector<Integer>{5, 6});
    CHECK((a + b).order() == 1);
    CHECK((a * b).order() == 1);
    CHECK((a * b) == ZSeries(std::vector<Integer>{5, 16}));
    CHECK((a - a).is_zero());
    CHECK_THROWS_AS(ZSeries(std::vector<Integer>{}), std::invalid_argument);
  }

  TEST_CASE("geometric series inverse over the integers") {
    auto one_minus_x = ZSeries::one(10) - ZSeries::variable(10);
    auto inv = series_inverse(one_minus_x);
    for (std::size_t n = 0; n <= 10; ++n) CHECK(inv[n] == 1);
    CHECK_THROWS_AS(series_inverse(ZSeries::constant(2, 3)), SeriesDomainError);
  }

  TEST_CASE("exact integer division refuses remainders") {
    CHECK(RingTraits<Integer>::divide(Integer(12), 4) == 3);
    CHECK(RingTraits<Integer>::divide(Integer(-12), -4) == 3);
    CHECK_THROWS_AS(RingTraits<Integer>::divide(Integer(7), 2), SeriesDomainError);
    CHECK_THROWS_AS(RingTraits<Integer>::divide(Integer(7), 0), SeriesDomainError);
  }

  TEST_CASE("log and exp reject the wrong constant term") {
    CHECK_THROWS_AS(series_log(QSeries::constant(2, 4)), SeriesDomainError);
    CHECK_THROWS_AS(series_exp(QSeries::one(4)), SeriesDomainError);
    CHECK_THROWS_AS(series_compose(QSeries::one(4), QSeries::one(4)), SeriesDomainError);
  }

  TEST_CASE("exp of x has coefficients 1/n!") {
    auto e = series_exp(QSeries::variable(12));
    for (unsigned n = 0; n <= 12; ++n) CHECK(e[n] == make_rational(1, 1) / Rational(factorial(n)));
  }

  TEST_CASE("property: log and exp are inverse, exp is a homomorphism") {
    Rng rng(20240611);
    for (int trial = 0; trial < 25; ++trial) {
      const std::size_t order = 1 + rng() % 12;
      auto f = random_series(rng, order, 0);
      auto g = random_series(rng, order, 0);
      CHECK(series_log(series_exp(f)) == f);
      CHECK(series_exp(f + g) == series_exp(f) * series_exp(g));
      auto h = random_series(rng, order, 1);
      CHECK(series_exp(series_log(h)) == h);
      CHECK(series_log(h * h) == Rational(2) * series_log(h));
    }
  }

  TEST_CASE("property: inverse and integer powers") {
    Rng rng(7);
    for (int trial = 0; trial < 25; ++trial) {
      const std::size_t order = rng() % 10;
      Rational c0 = random_rational(rng);
      if (sgn(c0) == 0) c0 = 3;
      auto f = random_series(rng, order, c0);
      CHECK(f * series_inverse(f) == QSeries::one(order));
      auto cube = f * f * f;
      CHECK(series_pow_int(f, 3) == cube);
      CHECK(series_pow_int(f, -3) == series_inverse(cube));
      CHECK(series_pow_int(f, 0) == QSeries::one(order));
    }
  }

  TEST_CASE("property: composition is associative and x is its unit") {
    Rng rng(99);
    for (int trial = 0; trial < 15; ++trial) {
      const std::size_t order = 1 + rng() % 8;
      auto f = random_series(rng, order, random_rational(rng));
      auto g = random_series(rng, order, 0);
      auto h = random_series(rng, order, 0);
      CHECK(series_compose(f, series_compose(g, h)) == series_compose(series_compose(f, g), h));
      CHECK(series_compose(f, QSeries::variable(order)) == f);
      CHECK(series_compose(QSeries::variable(order), g) == g);
    }
  }

  TEST_CASE("theta derivative and power substitution") {
    ZSeries f(std::vector<Integer>{4, 3, 2, 1});
    CHECK(series_theta_derivative(f) == ZSeries(std::vector<Integer>{0, 3, 4, 3}));
    CHECK(series_substitute_power(f, 2) == ZSeries(std::vector<Integer>{4, 0, 3, 0}));
    CHECK_THROWS_AS(series_substitute_power(f, 0), std::invalid_argument);
  }

  TEST_CASE("mirror reversion composes back to the identity") {
    Rng rng(31337);
    for (int trial = 0; trial < 10; ++trial) {
      const std::size_t N = 2 + rng() % 10;
      auto S = random_series(rng, N, 0);
      auto u = mirror_reversion(S, N);
      REQUIRE(u.order() == N);
      // Ū(u(Ū)) = u·exp(S(u)) must be Ū itself.
      auto forward = u * series_exp(series_compose(S.truncate(N), u));
      CHECK(forward == QSeries::variable(N));
    }
  }

  TEST_CASE("mirror reversion matches Lagrange inversion") {
    // For x = u·exp(S(u)): [x^n] u(x) = (1/n)·[t^{n−1}] exp(−n·S(t)).
    Rng rng(4242);
    const std::size_t N = 9;
    auto S = random_series(rng, N, 0);
    auto u = mirror_reversion(S, N);
    CHECK(u[0] == 0);
    for (std::size_t n = 1; n <= N; ++n) {
      auto e = series_exp(Rational(-static_cast<long>(n)) * S);
      CHECK(u[n] == e[n - 1] / Rational(static_cast<long>(n)));
    }
  }
}

TEST_SUITE("nilpotent scalars") {
  TEST_CASE("dual numbers square epsilon to zero") {
    DualScalar eps(0, 1);
    CHECK(eps * eps == DualScalar(0));
    DualScalar a(make_rational(2, 3), 5);
    auto inv = a.inverse();
    REQUIRE(inv);
    CHECK(a * *inv == DualScalar(1));
    CHECK_FALSE(DualScalar(0, 1).inverse());
  }

  TEST_CASE("property: bi-nilpotent inverse") {
    Rng rng(5);
    for (int trial = 0; trial < 30; ++trial) {
      Rational c00 = random_rational(rng);
      if (sgn(c00) == 0) c00 = -2;
      BiNilpotent v(c00, random_rational(rng), random_rational(rng), random_rational(rng));
      auto inv = v.inverse();
      REQUIRE(inv);
      CHECK(v * *inv == BiNilpotent(1));
    }
    BiNilpotent j1(0, 1, 0, 0), j2(0, 0, 1, 0);
    CHECK(j1 * j1 == BiNilpotent(0));
    CHECK(j2 * j2 == BiNilpotent(0));
    CHECK(j1 * j2 == BiNilpotent(0, 0, 0, 1));
  }

  TEST_CASE("dual series log reads off the derivative part") {
    // log(1 + (1+ε)x) has ε-part x/(1+x).
    std::vector<DualScalar> c(6, DualScalar(0));
    c[0] = 1;
    c[1] = DualScalar(1, 1);
    auto lg = series_log(TruncatedSeries<DualScalar>(std::move(c)));
    for (std::size_t n = 1; n <= 5; ++n) CHECK(lg[n].deriv() == Rational((n % 2 == 1) ? 1 : -1));
  }
}

TEST_SUITE("bivariate and trivariate series") {
  TEST_CASE("property: bivariate inverse and log of a product") {
    Rng rng(11);
    for (int trial = 0; trial < 8; ++trial) {
      auto f = random_series(rng, 5, 1);
      auto g = random_series(rng, 4, 1);
      auto fg = BivariateSeries<Rational>::outer(f, g);
      auto one = BivariateSeries<Rational>::outer(QSeries::one(5), QSeries::one(4));
      CHECK(fg * bivariate_inverse(fg) == one);
      auto lg = bivariate_log(fg);
      auto lf = series_log(f), lgy = series_log(g);
      for (std::size_t i = 0; i <= 5; ++i)
        for (std::size_t j = 0; j <= 4; ++j) {
          Rational expected = (j == 0 ? lf[i] : Rational(0)) + (i == 0 ? lgy[j] : Rational(0));
          CHECK(lg(i, j) == expected);
        }
    }
  }

  TEST_CASE("bivariate composition agrees with the univariate one") {
    Rng rng(12);
    auto f = random_series(rng, 6, 2);
    auto g = random_series(rng, 5, 1);
    auto inner = random_series(rng, 6, 0);
    auto composed = bivariate_compose_x(BivariateSeries<Rational>::outer(f, g), inner);
    CHECK(composed == BivariateSeries<Rational>::outer(series_compose(f, inner), g));
    auto swapped = bivariate_compose_y(BivariateSeries<Rational>::outer(g, f), inner);
    CHECK(swapped == BivariateSeries<Rational>::outer(g, series_compose(f, inner)));
    CHECK(composed.transpose().transpose() == composed);
  }

  TEST_CASE("trivariate theta and variable shift respect the truncation") {
    TrivariateSeries f({3, 3, 3}, 3);
    f.set({1, 0, 0}, 2);
    f.set({1, 2, 0}, 5);
    auto t0 = f.theta(0);
    CHECK(t0.coefficient({1, 0, 0}) == 2);
    CHECK(t0.coefficient({1, 2, 0}) == 5);
    auto t1 = f.theta(1);
    CHECK(t1.coefficient({1, 0, 0}) == 0);
    CHECK(t1.coefficient({1, 2, 0}) == 10);
    auto shifted = f.multiply_variable(2);
    CHECK(shifted.coefficient({1, 0, 1}) == 2);
    CHECK_FALSE(shifted.admits({1, 2, 1}));
    CHECK(f.admits({1, 2, 0}));
    CHECK_FALSE(f.admits({2, 2, 0}));
  }

  TEST_CASE("trivariate product over a total-degree truncation") {
    TrivariateSeries x({2, 2, 2}, 2), y({2, 2, 2}, 2);
    x.set({0, 0, 0}, 1);
    x.set({1, 0, 0}, 1);
    y.set({0, 0, 0}, 1);
    y.set({0, 1, 0}, -1);
    auto p = x * y;
    CHECK(p.coefficient({1, 1, 0}) == -1);
    CHECK(p.coefficient({0, 0, 0}) == 1);
    CHECK((p - p).terms().empty());
  }
}
