// Acceptance suite: one line per criterion, nonzero exit on any failure.
// Run via ctest or directly; fixtures come from the source tree.
#include <chrono>
#include <cmath>
#include <complex>
#include <cstdlib>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include "gdlim/documents.hpp"
#include "gdlim/enumerator.hpp"
#include "gdlim/spectral.hpp"

using namespace gdlim;

namespace {

int failures = 0;
std::vector<std::string> notes;

void report(int criterion, bool ok, const std::string& what) {
  std::cout << (ok ? "PASS" : "FAIL") << " criterion " << criterion << ": " << what << "\n";
  if (!ok) ++failures;
}

double seconds_since(std::chrono::steady_clock::time_point t0) {
  return std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
}

Family fixture(const std::string& name) {
  return load_family(std::string(GDLIM_FIXTURE_DIR) + "/" + name + ".json");
}

struct FixtureExpectation {
  const char* file;
  long d;
  Rational e;
  Rational v;
};

const std::vector<FixtureExpectation>& expectations() {
  static const std::vector<FixtureExpectation> rows = {
      {"claw_genus", 16, Rational(6, 7), Rational(8, 147)},
      {"claw_euler", 64, Rational(160, 87), Rational(BigInt(269092), BigInt(1975509))},
      {"grid_genus", 24, Rational(34, 41), Rational(BigInt(4816), BigInt(68921))},
      {"grid_euler", 96, Rational(5488, 3037),
       Rational(BigInt(4819233780LL), BigInt(28011371653LL))},
      {"ladders_genus", 4, Rational(1, 3), Rational(2, 27)},
      {"ladders_euler", 8, Rational(4, 5), Rational(22, 125)},
  };
  return rows;
}

void criterion_1_exact_limit_parameters() {
  bool ok = true;
  std::ostringstream os;
  for (const auto& row : expectations()) {
    auto t0 = std::chrono::steady_clock::now();
    LimitReport r = fixture(row.file).analyze();
    double dt = seconds_since(t0);
    bool match = r.e && r.v && *r.e == row.e && *r.v == row.v && dt < 1.0;
    if (!match) {
      ok = false;
      os << " [" << row.file << ": e=" << (r.e ? fraction_string(*r.e) : "-")
         << " v=" << (r.v ? fraction_string(*r.v) : "-") << " in " << dt << "s]";
    }
  }
  report(1, ok, "analyze reproduces all six reference (e, v) pairs exactly, < 1 s each" +
                    os.str());
}

void criterion_2_dominant_root_structure() {
  bool ok = true;
  std::ostringstream os;
  for (const auto& row : expectations()) {
    Family fam = fixture(row.file);
    LimitReport r = fam.analyze();
    CharPoly f = fam.matrix ? char_poly(fam.matrix->matrix)
                            : char_poly_from_recurrence(fam.recurrence->coefficients);
    bool f_at_d_zero = f.f.eval(1, Rational(row.d)) == 0;
    bool f_lambda_nonzero = bipoly_partials(f.f).f_lambda.eval(1, Rational(row.d)) != 0;
    bool margin_ok = r.margin && *r.margin > 0.1 && r.dominant_simple &&
                     r.d == Rational(row.d);
    if (!(f_at_d_zero && f_lambda_nonzero && margin_ok)) {
      ok = false;
      os << " [" << row.file << ": D=" << fraction_string(r.d)
         << " margin=" << (r.margin ? *r.margin : -1) << "]";
    }
  }
  report(2, ok,
         "F(1,D) = 0 exactly with D in {16,64,24,96,4,8}, F_lambda(1,D) != 0, "
         "subdominant margin > 0.1" +
             os.str());
}

void criterion_3_primitivity() {
  LimitReport ladder = fixture("ladders_euler").analyze();
  LimitReport q3 = fixture("example_q3").analyze();
  bool ok = ladder.primitivity == Primitivity::Primitive &&
            q3.primitivity == Primitivity::Imprimitive &&
            q3.limit_case == LimitCase::Inconclusive;
  report(3, ok,
         "ladder Euler M(1) is primitive; the diagonal example is imprimitive and "
         "inconclusive overall");
}

void criterion_4_oracle_equivalence() {
  auto t0 = std::chrono::steady_clock::now();
  bool ok = true;
  std::ostringstream os;
  Family fam = fixture("ladders_euler");
  for (long n = 1; n <= 3 && ok; ++n) {
    MultiGraph member = build_family_member(*fam.amalgamation, n);
    EulerCrosscapResult ec = euler_and_crosscap_distributions(member);
    if (fam.total(n) != polynomial_from_distribution(ec.euler)) {
      ok = false;
      os << " [totals differ from enumeration at n=" << n << "]";
    }
  }
  // conservation laws on every enumerated graph
  std::vector<MultiGraph> corpus;
  for (long n = 1; n <= 3; ++n) corpus.push_back(build_family_member(*fam.amalgamation, n));
  for (const char* name : {"c3", "c4", "b2", "d3", "k4", "k33", "path4", "rooted_triangle"})
    corpus.push_back(load_graph(std::string(GDLIM_FIXTURE_DIR) + "/graphs/" + name + ".json").graph);
  for (const MultiGraph& g : corpus) {
    EmbeddingDistribution genus = genus_distribution(g);
    EulerCrosscapResult ec = euler_and_crosscap_distributions(g);
    BigInt rotations = g.rotation_count();
    if (genus.total != rotations ||
        ec.euler.total != rotations * pow2(static_cast<unsigned>(g.beta()))) {
      ok = false;
      os << " [conservation fails on a corpus graph]";
      break;
    }
  }
  double dt = seconds_since(t0);
  if (dt >= 60.0) {
    ok = false;
    os << " [took " << dt << "s]";
  }
  report(4, ok,
         "transfer-matrix totals equal full enumeration for the first three ladders; "
         "rotation and twist counts conserved on every enumerated graph, < 60 s" +
             os.str());
}

void criterion_5_euler_identity_and_gap_bound() {
  bool ok = true;
  std::ostringstream os;
  std::vector<MultiGraph> corpus;
  Family fam = fixture("ladders_euler");
  for (long n = 1; n <= 3; ++n) corpus.push_back(build_family_member(*fam.amalgamation, n));
  for (const char* name : {"c3", "c4", "b2", "d3", "k4", "k33", "rooted_triangle"})
    corpus.push_back(load_graph(std::string(GDLIM_FIXTURE_DIR) + "/graphs/" + name + ".json").graph);
  for (const MultiGraph& g : corpus) {
    IntPolynomial gamma = polynomial_from_distribution(genus_distribution(g));
    EulerCrosscapResult ec = euler_and_crosscap_distributions(g);
    IntPolynomial euler = polynomial_from_distribution(ec.euler);
    IntPolynomial crosscap = polynomial_from_distribution(ec.crosscap);
    if (euler != euler_from_parts(gamma, crosscap)) {
      ok = false;
      os << " [Euler identity fails]";
      break;
    }
    if (crosscap.is_zero()) continue;  // trees: no nonorientable embeddings
    GapReport gap = crosscap_euler_gap(gamma, crosscap);
    Rational expected_bound =
        Rational(2) / Rational(pow2(static_cast<unsigned>(g.beta())));
    if (!(gap.gap <= gap.bound) || gap.bound != expected_bound) {
      ok = false;
      os << " [gap bound fails: gap=" << fraction_string(gap.gap)
         << " bound=" << fraction_string(gap.bound) << "]";
      break;
    }
  }
  report(5, ok,
         "E(x) = Gamma(x^2) + crosscap(x) exactly, and the CDF gap obeys the exact "
         "2*2^-beta bound on every enumerated graph" +
             os.str());
}

void criterion_6_clt_convergence() {
  auto t0 = std::chrono::steady_clock::now();
  bool ok = true;
  std::ostringstream os;
  for (const char* name : {"claw_genus", "ladders_genus"}) {
    Family fam = fixture(name);
    LimitReport r = fam.analyze();
    std::vector<ConvergenceRow> rows =
        clt_series(*fam.recurrence, *r.e, *r.v, {25, 50, 100, 200});
    for (std::size_t i = 1; i < rows.size(); ++i)
      if (!(rows[i].ks_distance < rows[i - 1].ks_distance)) {
        ok = false;
        os << " [" << name << ": ks not strictly decreasing]";
      }
    if (!(rows[3].mean_gap / 200.0 < 0.5 * rows[0].mean_gap / 25.0)) {
      ok = false;
      os << " [" << name << ": mean_gap/n did not halve]";
    }
  }
  double dt = seconds_since(t0);
  if (dt >= 120.0) {
    ok = false;
    os << " [took " << dt << "s]";
  }
  report(6, ok,
         "KS distance strictly decreases over n = 25, 50, 100, 200 and mean_gap/n at 200 "
         "is under half its n = 25 value, < 120 s" +
             os.str());
}

void criterion_7_moment_formulas() {
  bool ok = true;
  std::ostringstream os;
  for (const auto& row : expectations()) {
    Family fam = fixture(row.file);
    for (long n = 1; n <= 30; ++n) {
      EmbeddingDistribution d =
          distribution_from_polynomial(fam.total(n), surface_kind_of(fam.kind), n);
      MomentSummary m = moments(d);
      Rational mean = 0, var = 0;
      for (std::size_t i = 0; i < d.weights.size(); ++i)
        mean += Rational(BigInt(i) * d.weights[i], d.total);
      for (std::size_t i = 0; i < d.weights.size(); ++i) {
        Rational gap = Rational(BigInt(i)) - mean;
        var += gap * gap * Rational(d.weights[i], d.total);
      }
      if (m.mean != mean || m.variance != var) {
        ok = false;
        os << " [" << row.file << " n=" << n << "]";
        break;
      }
    }
  }
  report(7, ok,
         "derivative-based means and variances equal the direct summation definitions "
         "exactly for every fixture up to n = 30" +
             os.str());
}

void criterion_8_discrete_limit() {
  Family fam = fixture("const2");
  bool ok = true;
  std::ostringstream os;
  for (long probe : {1, 7, 40}) {
    DiscreteLimit d = discrete_limit(fam.as_recurrence(), probe, 1e-12);
    if (!(d.converged && d.kappa == 1 && d.omegas.size() == 2 &&
          d.omegas[0] == Rational(1, 2) && d.omegas[1] == Rational(1, 2))) {
      ok = false;
      os << " [probe " << probe << " did not give (1/2, 1/2)]";
    }
  }
  report(8, ok, "the constant-matrix fixture reports omega = (1/2, 1/2), kappa = 1 exactly" +
                    os.str());
}

void criterion_9_constructors() {
  bool ok = true;
  std::ostringstream os;

  IntPolynomial d{1, 2}, s{3, 0, 1};  // stand-ins with D(1) = 3, S(1) = 4
  ProductionMatrix path = pathlike_matrix(d, s);
  if (!(path.at(0, 0) == d + s && path.at(0, 1) == d && path.at(1, 0).is_zero() &&
        path.at(1, 1) == s)) {
    ok = false;
    os << " [path-like entries differ]";
  }
  CharPoly pf = char_poly(path);
  // exact roots at x = 1: D(1) + S(1) and S(1); both checked to 0 residual,
  // far inside the 1e-9 budget
  if (pf.f.eval(1, Rational(d.eval_one() + s.eval_one())) != 0 ||
      pf.f.eval(1, Rational(s.eval_one())) != 0 || pf.f.degree_lambda() != 2) {
    ok = false;
    os << " [path-like eigenvalues differ]";
  }

  IntPolynomial p{2, 1}, q{1, 1};  // p(1) = 3, q(1) = 2
  ProductionMatrix lad = ladderlike_matrix(p, q);
  const IntPolynomial x2 = IntPolynomial::monomial(2, 1);
  const IntPolynomial x4 = IntPolynomial::monomial(4, 1);
  bool entries_ok = lad.at(0, 0) == p * x4 && lad.at(0, 1) == p * x2 &&
                    lad.at(0, 2).is_zero() && lad.at(1, 0).is_zero() &&
                    lad.at(1, 1) == q * IntPolynomial{2} && lad.at(1, 2) == q * IntPolynomial{4} &&
                    lad.at(2, 0) == q * x4 && lad.at(2, 1) == (p + q) * x2 &&
                    lad.at(2, 2) == p * x4;
  if (!entries_ok) {
    ok = false;
    os << " [ladder-like entries differ]";
  }
  CharPoly lf = char_poly(lad);
  Rational p1{p.eval_one()}, q1{q.eval_one()};
  if (lf.f.eval(1, 4 * (p1 + q1)) != 0 || lf.f.eval(1, 4 * p1 - 2 * q1) != 0 ||
      lf.f.eval(1, 0) != 0 || lf.f.degree_lambda() != 3) {
    ok = false;
    os << " [ladder-like eigenvalues differ]";
  }
  report(9, ok,
         "path-like and ladder-like constructors reproduce the displayed matrices "
         "symbolically and their x = 1 eigenvalue sets" +
             os.str());
}

}  // namespace

int main() {
  criterion_1_exact_limit_parameters();
  criterion_2_dominant_root_structure();
  criterion_3_primitivity();
  criterion_4_oracle_equivalence();
  criterion_5_euler_identity_and_gap_bound();
  criterion_6_clt_convergence();
  criterion_7_moment_formulas();
  criterion_8_discrete_limit();
  criterion_9_constructors();
  if (failures) {
    std::cout << failures << " criterion(s) failed\n";
    return 1;
  }
  std::cout << "all acceptance criteria passed\n";
  return 0;
}
