#include "schoen/truncated_series.hpp"

namespace schoen {

TruncatedSeries<Rational> mirror_reversion(const TruncatedSeries<Rational>& S, std::size_t N) {
  if (sgn(S[0]) != 0)
    throw SeriesDomainError("mirror_reversion: S must have zero constant term, got " + S[0].get_str());
  N = std::min(N, S.order() + 1);
  if (N == 0) return TruncatedSeries<Rational>(0);

  // exp(−S) once; every pass then only needs a composition with it.
  auto damping = series_exp(-S.truncate(N - 1));

  std::vector<Rational> u(N + 1, Rational(0));
  u[1] = 1;
  for (std::size_t k = 2; k <= N; ++k) {
    // u_k = [V^{k−1}] exp(−S(u)), which only involves u_1..u_{k−1}.
    TruncatedSeries<Rational> partial(std::vector<Rational>(u.begin(), u.begin() + static_cast<std::ptrdiff_t>(k)));
    auto composed = series_compose(damping.truncate(k - 1), partial);
    u[k] = composed[k - 1];
  }
  return TruncatedSeries<Rational>(std::move(u));
}

}  // namespace schoen
