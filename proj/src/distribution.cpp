#include "gdlim/distribution.hpp"

#include <algorithm>
#include <cmath>
#include <utility>

#include "gdlim/errors.hpp"

namespace gdlim {

std::string to_string(SurfaceKind kind) {
  switch (kind) {
    case SurfaceKind::Genus: return "genus";
    case SurfaceKind::Crosscap: return "crosscap";
    default: return "euler";
  }
}

SurfaceKind surface_kind_of(DistKind kind) {
  return kind == DistKind::Genus ? SurfaceKind::Genus : SurfaceKind::EulerGenus;
}

EmbeddingDistribution distribution_from_polynomial(const IntPolynomial& p, SurfaceKind kind,
                                                   long n) {
  if (!p.nonnegative())
    throw NegativeCoefficient("polynomial has a negative coefficient: " + p.to_string());
  EmbeddingDistribution d;
  d.weights = p.coeffs();
  d.total = p.eval_one();
  d.kind = kind;
  d.n = n;
  if (d.total == 0) throw ZeroTotal("polynomial has zero total weight");
  return d;
}

IntPolynomial polynomial_from_distribution(const EmbeddingDistribution& d) {
  return IntPolynomial{std::vector<BigInt>(d.weights)};
}

MomentSummary moments(const EmbeddingDistribution& d) {
  if (d.total == 0) throw ZeroTotal("moments need a positive total");
  IntPolynomial p = polynomial_from_distribution(d);
  IntPolynomial dp = p.derivative();
  IntPolynomial ddp = dp.derivative();
  Rational total{p.eval_one()};
  Rational mean = Rational(dp.eval_one()) / total;
  Rational variance = (Rational(ddp.eval_one()) + Rational(dp.eval_one())) / total - mean * mean;
  return MomentSummary{mean, variance};
}

double normal_cdf(double x) { return 0.5 * std::erfc(-x / std::sqrt(2.0)); }

double ks_distance(const EmbeddingDistribution& d, double mu, double sigma) {
  if (!(sigma > 0)) throw NonpositiveSigma("ks_distance needs sigma > 0");
  double sup = 0.0;
  BigInt cum = 0;
  for (std::size_t i = 0; i < d.weights.size(); ++i) {
    if (d.weights[i] == 0) continue;
    // Jump point: compare both CDF sides against Phi at the jump.
    double phi = normal_cdf((static_cast<double>(i) - mu) / sigma);
    double below = to_double(Rational(cum, d.total));
    cum += d.weights[i];
    double above = to_double(Rational(cum, d.total));
    sup = std::max({sup, std::abs(above - phi), std::abs(below - phi)});
  }
  return sup;
}

std::vector<ConvergenceRow> clt_series(const std::function<IntPolynomial(long)>& total,
                                       SurfaceKind kind, const Rational& e, const Rational& v,
                                       const std::vector<long>& n_list) {
  if (!(v > 0)) throw NotNormalLimit("clt_series requires v > 0");
  std::vector<ConvergenceRow> rows;
  rows.reserve(n_list.size());
  for (long n : n_list) {
    EmbeddingDistribution d = distribution_from_polynomial(total(n), kind, n);
    MomentSummary m = moments(d);
    ConvergenceRow row;
    row.n = n;
    const Rational rn{BigInt(n)};
    row.ks_distance = ks_distance(d, to_double(e * rn), std::sqrt(to_double(v * rn)));
    row.mean_gap = std::abs(to_double(m.mean - e * rn));
    row.var_gap = std::abs(to_double(m.variance - v * rn));
    rows.push_back(row);
  }
  return rows;
}

std::vector<ConvergenceRow> clt_series(const FamilySpec& spec, const Rational& e,
                                       const Rational& v, const std::vector<long>& n_list) {
  return clt_series([&spec](long n) { return total_polynomial(spec, n); },
                    surface_kind_of(spec.kind), e, v, n_list);
}

std::vector<ConvergenceRow> clt_series(const RecurrenceSpec& spec, const Rational& e,
                                       const Rational& v, const std::vector<long>& n_list) {
  return clt_series([&spec](long n) { return evolve_recurrence(spec, n); },
                    surface_kind_of(spec.kind), e, v, n_list);
}

IntPolynomial euler_from_parts(const IntPolynomial& genus, const IntPolynomial& crosscap) {
  if (!genus.nonnegative() || !crosscap.nonnegative())
    throw NegativeCoefficient("euler_from_parts expects nonnegative polynomials");
  return genus.compose_square() + crosscap;
}

GapReport crosscap_euler_gap(const IntPolynomial& genus, const IntPolynomial& crosscap) {
  if (crosscap.is_zero())
    throw ZeroCrosscap("crosscap polynomial is zero; the graph has no nonorientable embeddings");
  IntPolynomial euler = euler_from_parts(genus, crosscap);
  const BigInt euler_total = euler.eval_one();
  const BigInt cross_total = crosscap.eval_one();
  GapReport report;
  report.a_n = Rational(genus.eval_one()) / Rational(euler_total);
  report.bound = 2 * report.a_n;
  Rational sup = 0;
  BigInt cum_euler = 0, cum_cross = 0;
  const int top = std::max(euler.degree(), crosscap.degree());
  for (int i = 0; i <= top; ++i) {
    cum_euler += euler.coeff(i);
    cum_cross += crosscap.coeff(i);
    Rational gap = Rational(cum_euler, euler_total) - Rational(cum_cross, cross_total);
    if (gap < 0) gap = -gap;
    sup = std::max(sup, gap);
  }
  report.gap = sup;
  return report;
}

bool beta_bound_check(const BigInt& genus_at_one, const BigInt& euler_at_one, unsigned beta) {
  return euler_at_one == genus_at_one * pow2(beta);
}

DiscreteLimit discrete_limit(const RecurrenceSpec& spec, long n_probe, double tol) {
  for (const auto& b : spec.coefficients)
    if (!b.is_constant())
      throw NotConstantCoefficients("recurrence coefficient " + b.to_string() +
                                    " is not constant; the discrete limit clause does not apply");
  if (n_probe < static_cast<long>(spec.order()))
    n_probe = static_cast<long>(spec.order());
  auto probabilities = [&spec](long n) {
    IntPolynomial p = evolve_recurrence(spec, n);
    BigInt total = p.eval_one();
    if (total == 0) throw ZeroTotal("probe polynomial has zero total");
    std::vector<Rational> out(p.coeffs().size());
    for (std::size_t j = 0; j < out.size(); ++j) out[j] = Rational(p.coeff(j), total);
    return out;
  };
  std::vector<Rational> first = probabilities(n_probe);
  std::vector<Rational> second = probabilities(2 * n_probe);
  const std::size_t len = std::max(first.size(), second.size());
  first.resize(len);
  second.resize(len);
  double worst = 0.0;
  for (std::size_t j = 0; j < len; ++j)
    worst = std::max(worst, std::abs(to_double(second[j] - first[j])));
  DiscreteLimit result;
  result.probe_n = 2 * n_probe;
  result.converged = worst < tol;
  if (result.converged) {
    result.omegas = std::move(second);
    while (result.omegas.size() > 1 && result.omegas.back() == 0) result.omegas.pop_back();
    result.kappa = static_cast<long>(result.omegas.size()) - 1;
  }
  return result;
}

}  // namespace gdlim
