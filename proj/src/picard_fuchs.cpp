#include "schoen/picard_fuchs.hpp"

#include <stdexcept>

#include "schoen/bmodel.hpp"

namespace schoen::bmodel {

namespace {

ThetaAffine affine(long t0, long t1, long t2, long c) { return ThetaAffine{{t0, t1, t2}, c}; }

PfOperator hesse_type(const std::string& name, unsigned own, unsigned other) {
  // (3θ_own − θ₀)θ_own − 9u_own(3θ_own + θ₀ + 2)(3θ_own + θ₀ + 1) + u₀θ_own(3θ_other + θ₀ + 1)
  auto theta = [](unsigned var, long k) {
    std::array<long, 3> t{};
    t[var] = k;
    return t;
  };
  auto mix = [&](unsigned var, long c) {
    auto t = theta(var, 3);
    t[0] = 1;
    return ThetaAffine{t, c};
  };
  ThetaAffine lead{theta(own, 3), 0};
  lead.theta[0] = -1;
  ThetaAffine own_theta{theta(own, 1), 0};
  return PfOperator{name,
                    {
                        PfTerm{1, {lead, own_theta}},
                        PfTerm{-9, {MultiplyBy{own}, mix(own, 2), mix(own, 1)}},
                        PfTerm{1, {MultiplyBy{0}, own_theta, mix(other, 1)}},
                    }};
}

TrivariateSeries apply_factor(const PfFactor& factor, const TrivariateSeries& f) {
  if (const auto* mul = std::get_if<MultiplyBy>(&factor)) return f.multiply_variable(mul->variable);
  const auto& aff = std::get<ThetaAffine>(factor);
  auto out = Rational(aff.constant) * f;
  for (unsigned v = 0; v < 3; ++v)
    if (aff.theta[v] != 0) out = out + Rational(aff.theta[v]) * f.theta(v);
  return out;
}

}  // namespace

std::vector<PfOperator> picard_fuchs_operators() {
  PfOperator d3{"D3",
                {
                    PfTerm{1, {affine(1, 0, 0, 0), affine(1, 0, 0, 0)}},
                    PfTerm{-1, {MultiplyBy{0}, affine(1, 3, 0, 1), affine(1, 0, 3, 1)}},
                }};
  return {hesse_type("D1", 1, 2), hesse_type("D2", 2, 1), d3};
}

TrivariateSeries apply(const PfOperator& op, const TrivariateSeries& f) {
  TrivariateSeries total(f.orders(), f.max_total_degree());
  for (const auto& term : op.terms) {
    auto acc = f;
    for (auto it = term.factors.rbegin(); it != term.factors.rend(); ++it) acc = apply_factor(*it, acc);
    total = total + term.coefficient * acc;
  }
  return total;
}

PfOperator restrict_to_u0_zero(const PfOperator& op) {
  PfOperator out{op.name + "|u0=0", {}};
  for (const auto& term : op.terms) {
    bool has_u0 = false;
    PfTerm kept{term.coefficient, {}};
    for (const auto& factor : term.factors) {
      if (const auto* mul = std::get_if<MultiplyBy>(&factor)) {
        if (mul->variable == 0) has_u0 = true;
        kept.factors.push_back(factor);
      } else {
        auto aff = std::get<ThetaAffine>(factor);
        aff.theta[0] = 0;
        kept.factors.push_back(aff);
      }
    }
    if (!has_u0) out.terms.push_back(std::move(kept));
  }
  return out;
}

PfOperator with_flipped_term(const PfOperator& op, std::size_t term) {
  if (term >= op.terms.size()) throw std::out_of_range("with_flipped_term: no such term");
  PfOperator out = op;
  out.terms[term].coefficient = -out.terms[term].coefficient;
  out.name += "(term " + std::to_string(term) + " sign flipped)";
  return out;
}

PfReport pf_check(unsigned N, std::span<const PfOperator> operators) {
  if (N < 2) throw std::invalid_argument("pf_check: total degree must be at least 2");
  auto omega = omega0_trivariate(N + 1);
  PfReport report;
  report.max_degree = N;
  for (const auto& op : operators) {
    report.operators.push_back(op.name);
    auto image = apply(op, omega);
    for (const auto& [e, v] : image.terms()) {
      if (e[0] + e[1] + e[2] > N) continue;
      if (report.ok) {
        report.ok = false;
        report.residual = PfResidual{op.name, e, v};
      }
      break;
    }
  }
  return report;
}

PfReport pf_check(unsigned N) {
  auto ops = picard_fuchs_operators();
  return pf_check(N, ops);
}

}  // namespace schoen::bmodel
