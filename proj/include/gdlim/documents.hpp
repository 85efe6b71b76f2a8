#pragma once

#include <optional>
#include <string>
#include <utility>
#include <vector>

#include <json.hpp>

#include "gdlim/distribution.hpp"
#include "gdlim/multigraph.hpp"
#include "gdlim/production.hpp"
#include "gdlim/spectral.hpp"

namespace gdlim {

using Json = nlohmann::json;

// Linear construction: G_1 is given explicitly; each step glues a
// fresh copy of H onto the current root vertices (H's u-roots are identified
// with them) and the copy's v-roots become the new current roots.
struct Amalgamation {
  std::size_t g1_vertex_count = 0;
  std::vector<std::pair<int, int>> g1_edges;
  std::vector<int> g1_v_roots;
  std::size_t h_vertex_count = 0;
  std::vector<std::pair<int, int>> h_edges;
  std::vector<int> h_u_roots;
  std::vector<int> h_v_roots;

  friend bool operator==(const Amalgamation&, const Amalgamation&) = default;
};

MultiGraph build_family_member(const Amalgamation& am, long n);

// Which partial the first coordinate of a seeded initial vector carries.
enum class SeedOrder { DifferentFirst, SameFirst };

// Parsed family document: a matrix presentation, a recurrence presentation,
// or both (matrix plus explicit seeds is rejected as ambiguous).
struct Family {
  std::string name;
  DistKind kind = DistKind::Genus;
  std::optional<FamilySpec> matrix;
  std::optional<RecurrenceSpec> recurrence;
  std::optional<Amalgamation> amalgamation;

  IntPolynomial total(long n) const;
  RecurrenceSpec as_recurrence() const;
  LimitReport analyze(double tol = 1e-9) const;
};

struct GraphDocument {
  std::string name;
  MultiGraph graph;
  std::optional<std::pair<int, int>> roots;
};

Family parse_family(const Json& doc);
Family load_family(const std::string& path);
GraphDocument parse_graph(const Json& doc);
GraphDocument load_graph(const std::string& path);

// --- report documents -----------------------------------------------------

struct DistributionSection {
  long n = 0;
  std::string kind;
  std::vector<BigInt> weights;  // serialized as decimal strings
  BigInt total;
  std::vector<Rational> probabilities;  // present for normalized output

  friend bool operator==(const DistributionSection&, const DistributionSection&) = default;
};

DistributionSection make_distribution_section(const EmbeddingDistribution& d,
                                              bool with_probabilities);

struct PolynomialSection {
  long n = 0;
  std::vector<BigInt> coefficients;

  friend bool operator==(const PolynomialSection&, const PolynomialSection&) = default;
};

struct LimitSection {
  std::string name;
  std::string kind;
  Rational d;
  std::optional<Rational> e;
  std::optional<Rational> v;
  bool dominant_simple = false;
  std::string primitivity;
  std::string limit_case;
  std::optional<double> margin;
  bool constant_coefficients = false;
  bool input_error = false;
  std::vector<std::vector<double>> other_roots;  // [re, im, bound]
  std::vector<std::string> diagnostics;

  friend bool operator==(const LimitSection&, const LimitSection&) = default;
};

LimitSection make_limit_section(const LimitReport& report);

struct GapSection {
  Rational gap;
  Rational bound;
  Rational a_n;
  unsigned beta = 0;
  bool beta_check = false;

  friend bool operator==(const GapSection&, const GapSection&) = default;
};

struct DiscreteLimitSection {
  bool converged = false;
  long kappa = 0;
  long probe_n = 0;
  std::vector<Rational> omegas;

  friend bool operator==(const DiscreteLimitSection&, const DiscreteLimitSection&) = default;
};

struct OracleVerifySection {
  long n_max = 0;
  std::vector<long> checked;
  bool ok = false;
  std::string detail;

  friend bool operator==(const OracleVerifySection&, const OracleVerifySection&) = default;
};

struct ConvergenceSection {
  std::vector<ConvergenceRow> rows;

  friend bool operator==(const ConvergenceSection& a, const ConvergenceSection& b);
};

// Machine-readable result of one CLI command; parse(emit(r)) == r.
struct ReportDocument {
  std::string command;
  std::string name;
  std::optional<LimitSection> limit;
  std::vector<PolynomialSection> polynomials;
  std::vector<DistributionSection> distributions;
  std::optional<ConvergenceSection> convergence;
  std::optional<GapSection> gap;
  std::optional<DiscreteLimitSection> discrete;
  std::optional<OracleVerifySection> oracle;

  friend bool operator==(const ReportDocument&, const ReportDocument&) = default;
};

Json emit_report(const ReportDocument& report);
ReportDocument parse_report(const Json& doc);

std::string convergence_csv(const std::vector<ConvergenceRow>& rows);

}  // namespace gdlim
