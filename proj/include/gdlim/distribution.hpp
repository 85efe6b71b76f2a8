#pragma once

#include <functional>
#include <string>
#include <utility>
#include <vector>

#include "gdlim/exact.hpp"
#include "gdlim/polynomial.hpp"
#include "gdlim/production.hpp"

namespace gdlim {

enum class SurfaceKind { Genus, Crosscap, EulerGenus };

std::string to_string(SurfaceKind kind);
SurfaceKind surface_kind_of(DistKind kind);

// Nonnegative integer weight sequence with exact total; weights[i] counts
// embeddings at genus / crosscap-number / Euler-genus i.
struct EmbeddingDistribution {
  std::vector<BigInt> weights;
  BigInt total;  // always the exact weight sum
  SurfaceKind kind = SurfaceKind::Genus;
  long n = 0;    // family index, 0 when standalone
};

// Throws NegativeCoefficient / ZeroTotal.
EmbeddingDistribution distribution_from_polynomial(const IntPolynomial& p, SurfaceKind kind,
                                                   long n);

IntPolynomial polynomial_from_distribution(const EmbeddingDistribution& d);

struct MomentSummary {
  Rational mean;
  Rational variance;
};

// Exact mean P'(1)/P(1) and variance (P''(1)+P'(1))/P(1) - mean^2.
MomentSummary moments(const EmbeddingDistribution& d);

// Standard normal CDF, absolute error well under 1e-12.
double normal_cdf(double x);

// sup over jump points of the two-sided CDF gap against N(mu, sigma^2);
// exact rational CDF converted to double only at the comparison boundary.
double ks_distance(const EmbeddingDistribution& d, double mu, double sigma);

struct ConvergenceRow {
  long n = 0;
  double ks_distance = 0.0;
  double mean_gap = 0.0;  // |mean - e*n|
  double var_gap = 0.0;   // |variance - v*n|
};

// Evolve the family at each n, normalize, and measure convergence to the
// Gaussian limit N(e*n, v*n). Requires v > 0.
std::vector<ConvergenceRow> clt_series(const std::function<IntPolynomial(long)>& total,
                                       SurfaceKind kind, const Rational& e, const Rational& v,
                                       const std::vector<long>& n_list);
std::vector<ConvergenceRow> clt_series(const FamilySpec& spec, const Rational& e,
                                       const Rational& v, const std::vector<long>& n_list);
std::vector<ConvergenceRow> clt_series(const RecurrenceSpec& spec, const Rational& e,
                                       const Rational& v, const std::vector<long>& n_list);

// Euler-genus polynomial from orientable and nonorientable parts:
// E(x) = Gamma(x^2) + Gamma~(x).
IntPolynomial euler_from_parts(const IntPolynomial& genus, const IntPolynomial& crosscap);

struct GapReport {
  Rational gap;    // sup over integer x of |CDF_euler(x) - CDF_crosscap(x)|
  Rational bound;  // 2 * a_n
  Rational a_n;    // Gamma(1) / E(1)
};

// Throws ZeroCrosscap when the crosscap polynomial is zero.
GapReport crosscap_euler_gap(const IntPolynomial& genus, const IntPolynomial& crosscap);

// Checks E(1) = Gamma(1) * 2^beta exactly.
bool beta_bound_check(const BigInt& genus_at_one, const BigInt& euler_at_one, unsigned beta);

struct DiscreteLimit {
  bool converged = false;
  long kappa = 0;
  std::vector<Rational> omegas;  // omega_0 .. omega_kappa at the second probe
  long probe_n = 0;
};

// Probes P(X_n = j) at n_probe and 2*n_probe for a constant-coefficient
// recurrence; reports the probed values when the probes agree within tol.
// Throws NotConstantCoefficients otherwise.
DiscreteLimit discrete_limit(const RecurrenceSpec& spec, long n_probe, double tol);

}  // namespace gdlim
