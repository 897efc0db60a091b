#include "schoen/bmodel.hpp"

#include <algorithm>
#include <string>

#include "schoen/bivariate_series.hpp"
#include "schoen/errors.hpp"

namespace schoen::bmodel {

HarmonicValue HarmonicValue::of(unsigned n) {
  HarmonicValue h;
  while (h.n < n) h = h.next();
  return h;
}

PochhammerDual pochhammer(const DualScalar& base, unsigned length) {
  auto p = PochhammerDual::start(base);
  while (p.length < length) p = p.extend();
  return p;
}

namespace {

// Σ_n numerator_n / denominator_n · wⁿ where both are products of dual
// Pochhammer symbols advanced in lock step.
TruncatedSeries<DualScalar> hypergeometric_dual(std::size_t N, const DualScalar& top_base, unsigned top_offset,
                                                const DualScalar& bottom_base) {
  std::vector<DualScalar> coeffs;
  coeffs.reserve(N + 1);
  auto top = pochhammer(top_base, top_offset);
  auto bottom = PochhammerDual::start(bottom_base);
  for (std::size_t n = 0; n <= N; ++n) {
    if (n > 0) {
      top = top.extend().extend().extend();
      bottom = bottom.extend();
    }
    DualScalar cube = bottom.value * bottom.value * bottom.value;
    coeffs.push_back(top.value * *cube.inverse());
  }
  return TruncatedSeries<DualScalar>(std::move(coeffs));
}

BiNilpotent in_first_slot(const DualScalar& d) { return BiNilpotent(d.value(), d.deriv(), 0, 0); }
BiNilpotent in_second_slot(const DualScalar& d) { return BiNilpotent(d.value(), 0, d.deriv(), 0); }

Integer require_integer(const Rational& v, std::size_t index, const std::string& what) {
  if (!is_integral(v))
    throw IntegralityError(what + " coefficient " + std::to_string(index) + " is " + v.get_str() + ", not an integer",
                           static_cast<long>(index), v.get_str());
  return v.get_num();
}

}  // namespace

TruncatedSeries<DualScalar> phi0_dual(std::size_t N) {
  return hypergeometric_dual(N, DualScalar(1, 3), 0, DualScalar(1, 1));
}

TruncatedSeries<DualScalar> phi1_dual(std::size_t N) {
  return hypergeometric_dual(N, DualScalar(1, 3), 1, DualScalar(1, 1));
}

TruncatedSeries<DualScalar> xi_dual(std::size_t N) {
  // (1+ε)_{3n} / (1)_n³
  return hypergeometric_dual(N, DualScalar(1, 1), 0, DualScalar(1, 0));
}

TruncatedSeries<Rational> log_derivative_part(const TruncatedSeries<DualScalar>& f) {
  return series_log(f).map([](const DualScalar& d) { return d.deriv(); });
}

TruncatedSeries<Rational> psi_series(std::size_t N) { return series_exp(log_derivative_part(xi_dual(N))); }

TruncatedSeries<Rational> mirror_logU_shift(std::size_t N) { return log_derivative_part(phi0_dual(N)); }

TruncatedSeries<Rational> mirror_map(std::size_t N) {
  auto e = series_exp(mirror_logU_shift(N));
  std::vector<Rational> coeffs(N + 1, Rational(0));
  for (std::size_t n = 1; n <= N; ++n) coeffs[n] = e[n - 1];
  return TruncatedSeries<Rational>(std::move(coeffs));
}

TruncatedSeries<Rational> b_generating_u(std::size_t N) {
  auto S = mirror_logU_shift(N);
  auto log_derivative = TruncatedSeries<Rational>::one(N) + series_theta_derivative(S);
  return Rational(9) * (series_inverse(psi_series(N)) * log_derivative);
}

CoefficientTable b_series(std::size_t N) {
  auto S = mirror_logU_shift(N);
  auto inverse_map = mirror_reversion(S, N);
  auto in_U = series_compose(b_generating_u(N), inverse_map);
  CoefficientTable table{TableLabel::b, {}, "9/psi(u) * u d/du log U, reverted through the mirror map"};
  table.values.reserve(N + 1);
  for (std::size_t n = 0; n <= in_U.order(); ++n) table.values.push_back(require_integer(in_U[n], n, "b_series"));
  return table;
}

TrivariateSeries omega0_trivariate(unsigned N) {
  TrivariateSeries omega({N, N, N}, N);
  for (unsigned m0 = 0; m0 <= N; ++m0)
    for (unsigned m1 = 0; m0 + m1 <= N; ++m1)
      for (unsigned m2 = 0; m0 + m1 + m2 <= N; ++m2) {
        Integer num = factorial(m0 + 3 * m1) * factorial(m0 + 3 * m2);
        Integer f0 = factorial(m0), f1 = factorial(m1), f2 = factorial(m2);
        Integer den = f0 * f0 * f1 * f1 * f1 * f2 * f2 * f2;
        omega.set({m0, m1, m2}, make_rational(num, den));
      }
  return omega;
}

Matrix<Integer> n1_matrix_factorized(std::size_t N1, std::size_t N2) {
  auto b = b_series(std::max(N1, N2));
  Matrix<Integer> out(N1 + 1, std::vector<Integer>(N2 + 1));
  for (std::size_t i = 0; i <= N1; ++i)
    for (std::size_t j = 0; j <= N2; ++j) out[i][j] = b[i] * b[j];
  return out;
}

Matrix<Integer> n1_matrix_binilpotent(std::size_t N1, std::size_t N2) {
  auto phi0_1 = phi0_dual(N1).map(in_first_slot);
  auto phi0_2 = phi0_dual(N2).map(in_second_slot);
  auto phi1_1 = phi1_dual(N1).map(in_first_slot);
  auto phi1_2 = phi1_dual(N2).map(in_second_slot);

  auto zeroth = BivariateSeries<BiNilpotent>::outer(phi0_1, phi0_2);
  auto first = BivariateSeries<BiNilpotent>::outer(phi1_1, phi1_2);
  auto u0_part = first * bivariate_inverse(zeroth);
  auto p0_over_9 = u0_part.map([](const BiNilpotent& v) { return v.c11(); });

  auto inv_psi_1 = series_inverse(psi_series(N1));
  auto inv_psi_2 = series_inverse(psi_series(N2));
  auto generating = BivariateSeries<Rational>::outer(Rational(9) * inv_psi_1, inv_psi_2) * p0_over_9;

  auto in_U = bivariate_compose_x(generating, mirror_reversion(mirror_logU_shift(N1), N1));
  in_U = bivariate_compose_y(in_U, mirror_reversion(mirror_logU_shift(N2), N2));

  Matrix<Integer> out(N1 + 1, std::vector<Integer>(N2 + 1));
  for (std::size_t i = 0; i <= N1; ++i)
    for (std::size_t j = 0; j <= N2; ++j) {
      const Rational& v = in_U(i, j);
      if (!is_integral(v))
        throw IntegralityError("N_{1," + std::to_string(i) + "," + std::to_string(j) + "} is " + v.get_str(),
                               static_cast<long>(i), v.get_str());
      out[i][j] = v.get_num();
    }
  return out;
}

Matrix<Integer> p0_first_order(std::size_t N1, std::size_t N2) {
  auto factorized = n1_matrix_factorized(N1, N2);
  auto nilpotent = n1_matrix_binilpotent(N1, N2);
  for (std::size_t i = 0; i <= N1; ++i)
    for (std::size_t j = 0; j <= N2; ++j)
      if (factorized[i][j] != nilpotent[i][j])
        throw RouteMismatchError("N_{1," + std::to_string(i) + "," + std::to_string(j) + "}: factorized " +
                                     factorized[i][j].get_str() + ", bi-nilpotent " + nilpotent[i][j].get_str(),
                                 static_cast<long>(i * (N2 + 1) + j));
  return factorized;
}

bool n0_vanishing_check(std::size_t N1, std::size_t N2) {
  auto product = BivariateSeries<BiNilpotent>::outer(phi0_dual(N1).map(in_first_slot),
                                                      phi0_dual(N2).map(in_second_slot));
  auto logarithm = bivariate_log(product);
  for (std::size_t i = 0; i <= N1; ++i)
    for (std::size_t j = 0; j <= N2; ++j)
      if (sgn(logarithm(i, j).c11()) != 0) return false;
  return true;
}

}  // namespace schoen::bmodel
