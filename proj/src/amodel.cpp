#include "schoen/amodel.hpp"

#include <algorithm>
#include <bitset>
#include <set>
#include <stdexcept>
#include <string>

#include "schoen/e8_lattice.hpp"
#include "schoen/errors.hpp"
#include "schoen/jacobi_theta.hpp"
#include "schoen/partitions.hpp"
#include "schoen/truncated_series.hpp"

namespace schoen::amodel {

CoefficientTable c_series(std::size_t N, ThetaRoute route) {
  switch (route) {
    case ThetaRoute::jacobi: return lattice::theta_e8_restricted_jacobi(N);
    case ThetaRoute::lattice: return lattice::theta_e8_restricted_lattice(N);
    case ThetaRoute::both: break;
  }
  auto jac = lattice::theta_e8_restricted_jacobi(N);
  auto lat = lattice::theta_e8_restricted_lattice(N);
  if (auto idx = first_mismatch(jac.values, lat.values)) {
    throw RouteMismatchError("c_" + std::to_string(*idx) + ": jacobi route gives " + jac.values[*idx].get_str() +
                                 ", lattice route gives " + lat.values[*idx].get_str(),
                             static_cast<long>(*idx));
  }
  jac.provenance = "jacobi and lattice routes (agree)";
  return jac;
}

CoefficientTable a_series(std::size_t N, ThetaRoute route) {
  auto c = c_series(N, route);
  auto eta = lattice::eta_factor_power12(N, 3);
  auto product = TruncatedSeries<Integer>(c.values) * eta;
  CoefficientTable a{TableLabel::a, {}, "c * (sum p(k) U^{3k})^12; c via " + c.provenance};
  a.values.assign(product.coefficients().begin(), product.coefficients().end());
  return a;
}

Integer pseudo_section_multiplicity(const PseudoSectionType& type) {
  unsigned top = 0;
  for (unsigned v : type.k) top = std::max(top, v);
  for (unsigned v : type.kprime) top = std::max(top, v);
  auto p = lattice::partition_numbers(top);
  Integer n = 1;
  for (unsigned v : type.k) n *= p[v];
  for (unsigned v : type.kprime) n *= p[v];
  return n;
}

Integer pseudo_section_count(unsigned n, unsigned m) {
  std::size_t top = std::max(n, m);
  auto gen = TruncatedSeries<Integer>(lattice::partition_numbers(top));
  auto twelve = series_pow_int(gen, 12);
  return twelve[n] * twelve[m];
}

Integer hilb_euler_oracle(unsigned k) {
  constexpr unsigned kMax = 12;
  if (k > kMax) throw std::invalid_argument("hilb_euler_oracle: k = " + std::to_string(k) + " exceeds 12");
  // A colength-k monomial ideal is determined by the k monomials x^i y^j it
  // misses; that set is closed under division. Grow such sets box by box.
  constexpr unsigned side = kMax + 1;
  using Shape = std::bitset<side * side>;
  auto bit = [](unsigned i, unsigned j) { return i * side + j; };
  std::set<std::string> level{Shape{}.to_string()};
  for (unsigned size = 0; size < k; ++size) {
    std::set<std::string> next;
    for (const auto& key : level) {
      Shape s(key);
      for (unsigned i = 0; i <= size; ++i) {
        for (unsigned j = 0; i + j <= size; ++j) {
          if (s.test(bit(i, j))) continue;
          bool left = i == 0 || s.test(bit(i - 1, j));
          bool below = j == 0 || s.test(bit(i, j - 1));
          if (left && below) {
            Shape grown = s;
            grown.set(bit(i, j));
            next.insert(grown.to_string());
          }
        }
      }
    }
    level = std::move(next);
  }
  return Integer(static_cast<unsigned long>(level.size()));
}

Matrix<Integer> n1_matrix(std::size_t N1, std::size_t N2) {
  auto a = a_series(std::max(N1, N2));
  Matrix<Integer> out(N1 + 1, std::vector<Integer>(N2 + 1));
  for (std::size_t i = 0; i <= N1; ++i)
    for (std::size_t j = 0; j <= N2; ++j) out[i][j] = a[i] * a[j];
  return out;
}

std::vector<PrepotentialSlice> prepotential_terms(std::size_t N, std::size_t k_max) {
  if (k_max < 1) throw std::invalid_argument("prepotential_terms: k_max must be at least 1");
  auto a = a_series(N);
  std::vector<PrepotentialSlice> slices;
  for (std::size_t n = 1; n <= k_max; ++n) {
    PrepotentialSlice slice{n, make_rational(1, static_cast<long>(n * n * n)),
                            Matrix<Rational>(N + 1, std::vector<Rational>(N + 1, Rational(0)))};
    // A^res(n t) = Σ a_m U^{n m}.
    for (std::size_t i = 0; i * n <= N; ++i)
      for (std::size_t j = 0; j * n <= N; ++j)
        slice.coefficients[i * n][j * n] = slice.prefactor * Rational(a[i] * a[j]);
    slices.push_back(std::move(slice));
  }
  return slices;
}

long classical_coupling(unsigned i, unsigned j, unsigned k) {
  if (i > 2 || j > 2 || k > 2) throw std::out_of_range("classical_coupling: index out of range");
  std::array<unsigned, 3> idx{i, j, k};
  std::sort(idx.begin(), idx.end());
  if (idx == std::array<unsigned, 3>{0, 1, 2}) return 9;
  if (idx == std::array<unsigned, 3>{1, 1, 2} || idx == std::array<unsigned, 3>{1, 2, 2}) return 3;
  return 0;
}

}  // namespace schoen::amodel
