#include "schoen/e8_lattice.hpp"

#include <algorithm>
#include <cmath>
#include <map>
#include <stdexcept>
#include <string>

namespace schoen::lattice {

namespace {

long isqrt(long v) {
  if (v <= 0) return 0;
  auto r = static_cast<long>(std::sqrt(static_cast<double>(v)));
  while (r * r > v) --r;
  while ((r + 1) * (r + 1) <= v) ++r;
  return r;
}

long floor_div(long a, long b) {
  long q = a / b;
  if ((a % b != 0) && ((a < 0) != (b < 0))) --q;
  return q;
}

long ceil_div(long a, long b) { return -floor_div(-a, b); }

struct BallWalker {
  int scale;
  std::array<int, 8> shift;
  const std::function<void(const E8Vector&)>& visit;
  E8Vector::Coords y{};

  void descend(std::size_t i, long remaining, int parity, long coord_sum) {
    if (i == 8) {
      if (((coord_sum % 4) + 4) % 4 == 0) visit(E8Vector(y));
      return;
    }
    long s = isqrt(remaining);
    long lo = ceil_div(-s - shift[i], scale);
    long hi = floor_div(s - shift[i], scale);
    if (((lo % 2) + 2) % 2 != parity) ++lo;
    for (long v = lo; v <= hi; v += 2) {
      long t = scale * v + shift[i];
      y[i] = static_cast<int>(v);
      descend(i + 1, remaining - t * t, parity, coord_sum + v);
    }
  }
};

}  // namespace

bool E8Vector::is_lattice_point(const Coords& doubled) {
  int parity = ((doubled[0] % 2) + 2) % 2;
  long sum = 0;
  for (int v : doubled) {
    if (((v % 2) + 2) % 2 != parity) return false;
    sum += v;
  }
  return ((sum % 4) + 4) % 4 == 0;
}

int E8Vector::norm() const {
  int s = 0;
  for (int v : doubled_) s += v * v;
  return s / 4;
}

int E8Vector::pair(const E8Vector& other) const {
  int s = 0;
  for (std::size_t i = 0; i < 8; ++i) s += doubled_[i] * other.doubled_[i];
  return s / 4;
}

E8Vector gamma_vector() { return E8Vector({2, 2, 2, 2, 2, 2, 2, -2}); }

std::array<E8Vector, 8> simple_roots() {
  std::array<E8Vector, 8> roots;
  roots[0] = E8Vector({1, -1, -1, -1, -1, -1, -1, 1});
  for (std::size_t k = 1; k < 7; ++k) {
    E8Vector::Coords c{};
    c[k] = 2;
    c[k - 1] = -2;
    roots[k] = E8Vector(c);
  }
  roots[7] = E8Vector({2, 2, 0, 0, 0, 0, 0, 0});
  return roots;
}

void for_each_in_shifted_ball(int scale, const std::array<int, 8>& shift, long bound,
                              const std::function<void(const E8Vector&)>& visit) {
  if (scale <= 0) throw std::invalid_argument("for_each_in_shifted_ball: scale must be positive");
  if (bound < 0) return;
  BallWalker walker{scale, shift, visit};
  walker.descend(0, bound, 0, 0);
  walker.descend(0, bound, 1, 0);
}

std::vector<E8Vector> e8_enumerate(int max_norm) {
  std::vector<E8Vector> out;
  if (max_norm < 0) return out;
  // Σ y_i² = 4·Q(σ) in doubled coordinates.
  for_each_in_shifted_ball(1, {}, 4L * max_norm, [&](const E8Vector& v) { out.push_back(v); });
  std::sort(out.begin(), out.end());
  return out;
}

std::vector<Integer> e8_theta_series(std::size_t N) {
  std::vector<Integer> coeffs(N + 1, Integer(0));
  for_each_in_shifted_ball(1, {}, 8L * static_cast<long>(N), [&](const E8Vector& v) {
    coeffs[static_cast<std::size_t>(v.norm() / 2)] += 1;
  });
  return coeffs;
}

CoefficientTable theta_e8_restricted_lattice(std::size_t N) {
  // In doubled coordinates: Σ (3y_i + 2γ_i)² = 24·m + 32 where
  // m = (3/2)Q(σ) + (σ, γ).
  const auto gamma = gamma_vector().doubled();
  std::array<int, 8> shift{};
  for (std::size_t i = 0; i < 8; ++i) shift[i] = gamma[i];  // 2γ_i in doubled units
  std::vector<long> counts(N + 1, 0);
  const long bound = 24L * static_cast<long>(N) + 32;
  const auto g = gamma_vector();
  for_each_in_shifted_ball(3, shift, bound, [&](const E8Vector& v) {
    long twice_m = 3L * v.norm() + 2L * v.pair(g);
    if (twice_m % 2 != 0 || twice_m < 0)
      throw std::logic_error("restricted theta: non-integral or negative degree at a lattice point");
    auto m = static_cast<std::size_t>(twice_m / 2);
    if (m > N) throw std::logic_error("restricted theta: enumeration bound admitted degree " + std::to_string(m));
    ++counts[m];
  });
  CoefficientTable table{TableLabel::c, {}, "lattice: direct E8 enumeration"};
  table.values.reserve(N + 1);
  for (long c : counts) table.values.emplace_back(c);
  return table;
}

std::vector<RootThetaTerm> theta_e8_root_multideg(int max_level) {
  std::map<std::pair<int, std::array<int, 8>>, long> buckets;
  if (max_level < 0) return {};
  const auto roots = simple_roots();
  for (const auto& v : e8_enumerate(2 * max_level)) {
    std::array<int, 8> pairing{};
    for (std::size_t j = 0; j < 8; ++j) pairing[j] = v.pair(roots[j]);
    ++buckets[{v.norm() / 2, pairing}];
  }
  std::vector<RootThetaTerm> out;
  out.reserve(buckets.size());
  for (const auto& [key, count] : buckets) out.push_back({key.first, key.second, Integer(count)});
  return out;
}

std::size_t root_specialization_coverage(int max_level) {
  if (max_level < 0) return 0;
  // Degree of a level-L vector is 3L + (σ, γ) ≥ 3L − ⌊√(16L)⌋, increasing in L.
  long next = max_level + 1;
  long lowest = 3 * next - isqrt(16 * next);
  return lowest <= 0 ? 0 : static_cast<std::size_t>(lowest);
}

std::vector<Integer> specialize_root_theta(const std::vector<RootThetaTerm>& terms, int max_level) {
  std::size_t covered = root_specialization_coverage(max_level);
  std::vector<Integer> c(covered, Integer(0));
  for (const auto& t : terms) {
    long degree = 3L * t.level - 2L * t.pairing[0] - t.pairing[1] + t.pairing[7];
    if (degree < 0) throw std::logic_error("specialize_root_theta: negative degree");
    if (static_cast<std::size_t>(degree) < covered) c[static_cast<std::size_t>(degree)] += t.count;
  }
  return c;
}

}  // namespace schoen::lattice
