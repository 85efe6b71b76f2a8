#include "gdlim/documents.hpp"

#include <cstdio>
#include <fstream>
#include <sstream>
#include <utility>

#include "gdlim/enumerator.hpp"
#include "gdlim/errors.hpp"

namespace gdlim {

namespace {

BigInt json_to_bigint(const Json& j, const std::string& where) {
  if (j.is_number_integer()) return BigInt(j.get<long long>());
  if (j.is_string()) {
    try {
      return BigInt(j.get<std::string>());
    } catch (const std::exception&) {
      throw ParseError(where + ": '" + j.get<std::string>() + "' is not an integer");
    }
  }
  throw ParseError(where + ": expected an integer or decimal string");
}

Json bigint_to_json(const BigInt& z) {
  static const BigInt kMax = (BigInt(1) << 53);
  if (z < kMax && z > -kMax) return Json(z.convert_to<long long>());
  return Json(z.str());
}

IntPolynomial json_to_poly(const Json& j, const std::string& where) {
  if (!j.is_array()) throw ParseError(where + ": expected a coefficient array");
  std::vector<BigInt> coeffs;
  coeffs.reserve(j.size());
  for (std::size_t i = 0; i < j.size(); ++i)
    coeffs.push_back(json_to_bigint(j[i], where + "[" + std::to_string(i) + "]"));
  return IntPolynomial(std::move(coeffs));
}

std::vector<IntPolynomial> json_to_poly_vector(const Json& j, const std::string& where) {
  if (!j.is_array()) throw ParseError(where + ": expected an array of coefficient arrays");
  std::vector<IntPolynomial> out;
  out.reserve(j.size());
  for (std::size_t i = 0; i < j.size(); ++i)
    out.push_back(json_to_poly(j[i], where + "[" + std::to_string(i) + "]"));
  return out;
}

Json rational_to_json(const Rational& q) {
  Json j;
  j["fraction"] = fraction_string(q);
  j["decimal"] = decimal_string(q);
  return j;
}

Rational json_to_rational(const Json& j, const std::string& where) {
  if (j.is_object() && j.contains("fraction")) return parse_fraction(j.at("fraction"));
  if (j.is_string()) return parse_fraction(j.get<std::string>());
  if (j.is_number_integer()) return Rational(BigInt(j.get<long long>()));
  throw ParseError(where + ": expected an exact rational");
}

std::vector<int> json_to_int_vector(const Json& j, const std::string& where) {
  if (!j.is_array()) throw ParseError(where + ": expected an array");
  std::vector<int> out;
  for (const auto& v : j) {
    if (!v.is_number_integer()) throw ParseError(where + ": expected integers");
    out.push_back(v.get<int>());
  }
  return out;
}

std::vector<std::pair<int, int>> json_to_edges(const Json& j, const std::string& where) {
  if (!j.is_array()) throw ParseError(where + ": expected an edge array");
  std::vector<std::pair<int, int>> edges;
  edges.reserve(j.size());
  for (std::size_t i = 0; i < j.size(); ++i) {
    const Json& e = j[i];
    if (!e.is_array() || e.size() != 2 || !e[0].is_number_integer() || !e[1].is_number_integer())
      throw ParseError(where + "[" + std::to_string(i) + "]: expected [u, v]");
    edges.emplace_back(e[0].get<int>(), e[1].get<int>());
  }
  return edges;
}

DistKind parse_kind(const Json& doc) {
  std::string kind = doc.value("kind", "genus");
  if (kind == "genus") return DistKind::Genus;
  if (kind == "euler") return DistKind::EulerGenus;
  throw ParseError("kind must be \"genus\" or \"euler\", got \"" + kind + "\"");
}

}  // namespace

MultiGraph build_family_member(const Amalgamation& am, long n) {
  if (n < 1) throw Error(ExitCode::Other, "family member index must be >= 1");
  std::size_t vertices = am.g1_vertex_count;
  std::vector<std::pair<int, int>> edges = am.g1_edges;
  std::vector<int> current = am.g1_v_roots;
  const std::size_t s = current.size();
  for (long step = 2; step <= n; ++step) {
    std::vector<int> map(am.h_vertex_count, -1);
    for (std::size_t j = 0; j < s; ++j) map[am.h_u_roots[j]] = current[j];
    for (std::size_t w = 0; w < am.h_vertex_count; ++w)
      if (map[w] < 0) map[w] = static_cast<int>(vertices++);
    for (auto [u, v] : am.h_edges) edges.emplace_back(map[u], map[v]);
    for (std::size_t j = 0; j < s; ++j) current[j] = map[am.h_v_roots[j]];
  }
  return MultiGraph(vertices, std::move(edges));
}

IntPolynomial Family::total(long n) const {
  if (matrix) return total_polynomial(*matrix, n);
  return evolve_recurrence(*recurrence, n);
}

RecurrenceSpec Family::as_recurrence() const {
  if (recurrence) return *recurrence;
  return recurrence_from_matrix(*matrix);
}

LimitReport Family::analyze(double tol) const {
  if (matrix) return analyze_family(*matrix, tol);
  return analyze_recurrence(*recurrence, tol);
}

GraphDocument parse_graph(const Json& doc) {
  if (!doc.is_object()) throw ParseError("graph document must be an object");
  if (!doc.contains("vertex_count")) throw ParseError("graph document needs vertex_count");
  if (!doc.contains("edges")) throw ParseError("graph document needs edges");
  GraphDocument g{doc.value("name", ""),
                  MultiGraph(doc.at("vertex_count").get<std::size_t>(),
                             json_to_edges(doc.at("edges"), "edges")),
                  std::nullopt};
  if (doc.contains("roots")) {
    auto roots = json_to_int_vector(doc.at("roots"), "roots");
    if (roots.size() != 2) throw ParseError("roots must list exactly two vertices");
    if (roots[0] < 0 || roots[1] < 0 || roots[0] >= static_cast<int>(g.graph.vertex_count()) ||
        roots[1] >= static_cast<int>(g.graph.vertex_count()))
      throw ParseError("roots out of vertex range");
    g.roots = std::make_pair(roots[0], roots[1]);
  }
  return g;
}

Family parse_family(const Json& doc) {
  if (!doc.is_object()) throw ParseError("family document must be an object");
  Family fam;
  fam.name = doc.value("name", "");
  fam.kind = parse_kind(doc);

  const bool has_matrix = doc.contains("matrix");
  const bool has_recurrence = doc.contains("recurrence");
  if (has_matrix == has_recurrence)
    throw ParseError("family document needs exactly one of \"matrix\" or \"recurrence\"");

  if (has_matrix) {
    const Json& m = doc.at("matrix");
    if (!m.is_array() || m.empty()) throw ParseError("matrix: expected a nonempty array of rows");
    const std::size_t k = m.size();
    std::vector<IntPolynomial> entries;
    entries.reserve(k * k);
    for (std::size_t i = 0; i < k; ++i) {
      const Json& row = m[i];
      if (!row.is_array() || row.size() != k) {
        std::ostringstream os;
        os << "matrix row " << i << " has " << row.size() << " entries, expected " << k;
        throw ParseError(os.str());
      }
      for (std::size_t j = 0; j < k; ++j)
        entries.push_back(json_to_poly(row[j], "matrix[" + std::to_string(i) + "][" +
                                                   std::to_string(j) + "]"));
    }
    ProductionMatrix matrix(k, std::move(entries));

    std::vector<IntPolynomial> initial;
    if (doc.contains("initial_vector")) {
      initial = json_to_poly_vector(doc.at("initial_vector"), "initial_vector");
    } else if (doc.contains("seed_graph")) {
      if (k != 2)
        throw ParseError("seed_graph seeding is defined for 2x2 matrices (one partial split)");
      GraphDocument seed = parse_graph(doc.at("seed_graph"));
      if (!seed.roots) throw ParseError("seed_graph needs roots to take partials at");
      std::string split = doc.at("seed_graph").value("seed_split", "vertices");
      PartialMode mode;
      if (split == "vertices") {
        mode = PartialMode::VertexFaces;
      } else if (split == "edge_sides") {
        mode = PartialMode::EdgeSides;
      } else {
        throw ParseError("seed_split must be \"vertices\" or \"edge_sides\"");
      }
      auto [d_part, s_part] =
          partial_distributions(seed.graph, seed.roots->first, seed.roots->second,
                                surface_kind_of(fam.kind), mode, enumeration_budget_from_env());
      std::string order = doc.at("seed_graph").value("seed_order", "ds");
      if (order == "ds") {
        initial = {d_part, s_part};
      } else if (order == "sd") {
        initial = {s_part, d_part};
      } else {
        throw ParseError("seed_order must be \"ds\" or \"sd\"");
      }
    } else {
      throw ParseError("matrix family needs initial_vector or seed_graph");
    }

    std::vector<IntPolynomial> spider;
    if (doc.contains("spider_vector"))
      spider = json_to_poly_vector(doc.at("spider_vector"), "spider_vector");
    fam.matrix = FamilySpec::make(std::move(matrix), std::move(initial), std::move(spider),
                                  fam.kind, fam.name);
  } else {
    auto coeffs = json_to_poly_vector(doc.at("recurrence"), "recurrence");
    if (!doc.contains("seeds")) throw ParseError("recurrence family needs seeds");
    auto seeds = json_to_poly_vector(doc.at("seeds"), "seeds");
    fam.recurrence = RecurrenceSpec::make(std::move(coeffs), std::move(seeds), fam.kind, fam.name);
    for (std::size_t i = 0; i < fam.recurrence->seeds.size(); ++i)
      if (!fam.recurrence->seeds[i].nonnegative())
        throw ParseError("seeds[" + std::to_string(i) + "] has a negative coefficient");
  }

  if (doc.contains("amalgamation")) {
    const Json& a = doc.at("amalgamation");
    Amalgamation am;
    const Json& g1 = a.at("g1");
    am.g1_vertex_count = g1.at("vertex_count").get<std::size_t>();
    am.g1_edges = json_to_edges(g1.at("edges"), "amalgamation.g1.edges");
    am.g1_v_roots = json_to_int_vector(a.at("g1_v_roots"), "amalgamation.g1_v_roots");
    const Json& h = a.at("h");
    am.h_vertex_count = h.at("vertex_count").get<std::size_t>();
    am.h_edges = json_to_edges(h.at("edges"), "amalgamation.h.edges");
    am.h_u_roots = json_to_int_vector(a.at("h_u_roots"), "amalgamation.h_u_roots");
    am.h_v_roots = json_to_int_vector(a.at("h_v_roots"), "amalgamation.h_v_roots");
    if (am.h_u_roots.size() != am.g1_v_roots.size() ||
        am.h_v_roots.size() != am.g1_v_roots.size())
      throw ParseError("amalgamation root lists must all have the same length");
    build_family_member(am, 1);  // validates G_1
    fam.amalgamation = std::move(am);
  }
  return fam;
}

namespace {

Json read_json_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw ParseError("cannot open " + path);
  Json doc;
  try {
    in >> doc;
  } catch (const std::exception& ex) {
    throw ParseError(path + ": " + ex.what());
  }
  return doc;
}

}  // namespace

Family load_family(const std::string& path) { return parse_family(read_json_file(path)); }

GraphDocument load_graph(const std::string& path) { return parse_graph(read_json_file(path)); }

DistributionSection make_distribution_section(const EmbeddingDistribution& d,
                                              bool with_probabilities) {
  DistributionSection s;
  s.n = d.n;
  s.kind = to_string(d.kind);
  s.weights = d.weights;
  s.total = d.total;
  if (with_probabilities) {
    s.probabilities.reserve(d.weights.size());
    for (const auto& w : d.weights) s.probabilities.emplace_back(Rational(w, d.total));
  }
  return s;
}

LimitSection make_limit_section(const LimitReport& report) {
  LimitSection s;
  s.name = report.name;
  s.kind = to_string(report.kind);
  s.d = report.d;
  s.e = report.e;
  s.v = report.v;
  s.dominant_simple = report.dominant_simple;
  s.primitivity = to_string(report.primitivity);
  s.limit_case = to_string(report.limit_case);
  s.margin = report.margin;
  s.constant_coefficients = report.constant_coefficients;
  s.input_error = report.input_error;
  for (const auto& r : report.other_roots)
    s.other_roots.push_back({r.value.real(), r.value.imag(), r.error_bound});
  s.diagnostics = report.diagnostics;
  return s;
}

bool operator==(const ConvergenceSection& a, const ConvergenceSection& b) {
  if (a.rows.size() != b.rows.size()) return false;
  for (std::size_t i = 0; i < a.rows.size(); ++i) {
    const auto& x = a.rows[i];
    const auto& y = b.rows[i];
    if (x.n != y.n || x.ks_distance != y.ks_distance || x.mean_gap != y.mean_gap ||
        x.var_gap != y.var_gap)
      return false;
  }
  return true;
}

Json emit_report(const ReportDocument& report) {
  Json j;
  j["command"] = report.command;
  j["name"] = report.name;
  if (report.limit) {
    const LimitSection& s = *report.limit;
    Json l;
    l["name"] = s.name;
    l["kind"] = s.kind;
    l["D"] = rational_to_json(s.d);
    if (s.e) l["e"] = rational_to_json(*s.e);
    if (s.v) l["v"] = rational_to_json(*s.v);
    l["dominant_simple"] = s.dominant_simple;
    l["primitivity"] = s.primitivity;
    l["case"] = s.limit_case;
    if (s.margin) l["margin"] = *s.margin;
    l["constant_coefficients"] = s.constant_coefficients;
    l["input_error"] = s.input_error;
    Json roots = Json::array();
    for (const auto& r : s.other_roots) roots.push_back(Json{r[0], r[1], r[2]});
    l["other_roots"] = roots;
    l["diagnostics"] = s.diagnostics;
    j["limit"] = l;
  }
  if (!report.polynomials.empty()) {
    Json arr = Json::array();
    for (const auto& p : report.polynomials) {
      Json e;
      e["n"] = p.n;
      Json coeffs = Json::array();
      for (const auto& c : p.coefficients) coeffs.push_back(bigint_to_json(c));
      e["coefficients"] = coeffs;
      arr.push_back(e);
    }
    j["polynomials"] = arr;
  }
  if (!report.distributions.empty()) {
    Json arr = Json::array();
    for (const auto& d : report.distributions) {
      Json e;
      e["n"] = d.n;
      e["kind"] = d.kind;
      Json weights = Json::array();
      for (const auto& w : d.weights) weights.push_back(w.str());
      e["weights"] = weights;
      e["total"] = d.total.str();
      if (!d.probabilities.empty()) {
        Json probs = Json::array();
        for (const auto& q : d.probabilities) probs.push_back(fraction_string(q));
        e["probabilities"] = probs;
      }
      arr.push_back(e);
    }
    j["distributions"] = arr;
  }
  if (report.convergence) {
    Json rows = Json::array();
    for (const auto& r : report.convergence->rows) {
      Json e;
      e["n"] = r.n;
      e["ks_distance"] = r.ks_distance;
      e["mean_gap"] = r.mean_gap;
      e["var_gap"] = r.var_gap;
      rows.push_back(e);
    }
    j["convergence"] = Json{{"rows", rows}};
  }
  if (report.gap) {
    Json g;
    g["gap"] = rational_to_json(report.gap->gap);
    g["bound"] = rational_to_json(report.gap->bound);
    g["a_n"] = rational_to_json(report.gap->a_n);
    g["beta"] = report.gap->beta;
    g["beta_check"] = report.gap->beta_check;
    j["gap"] = g;
  }
  if (report.discrete) {
    Json d;
    d["converged"] = report.discrete->converged;
    d["kappa"] = report.discrete->kappa;
    d["probe_n"] = report.discrete->probe_n;
    Json omegas = Json::array();
    for (const auto& q : report.discrete->omegas) omegas.push_back(fraction_string(q));
    d["omegas"] = omegas;
    j["discrete"] = d;
  }
  if (report.oracle) {
    Json o;
    o["n_max"] = report.oracle->n_max;
    o["checked"] = report.oracle->checked;
    o["ok"] = report.oracle->ok;
    o["detail"] = report.oracle->detail;
    j["oracle"] = o;
  }
  return j;
}

ReportDocument parse_report(const Json& doc) {
  ReportDocument report;
  report.command = doc.value("command", "");
  report.name = doc.value("name", "");
  if (doc.contains("limit")) {
    const Json& l = doc.at("limit");
    LimitSection s;
    s.name = l.value("name", "");
    s.kind = l.value("kind", "");
    s.d = json_to_rational(l.at("D"), "limit.D");
    if (l.contains("e")) s.e = json_to_rational(l.at("e"), "limit.e");
    if (l.contains("v")) s.v = json_to_rational(l.at("v"), "limit.v");
    s.dominant_simple = l.value("dominant_simple", false);
    s.primitivity = l.value("primitivity", "unknown");
    s.limit_case = l.value("case", "inconclusive");
    if (l.contains("margin")) s.margin = l.at("margin").get<double>();
    s.constant_coefficients = l.value("constant_coefficients", false);
    s.input_error = l.value("input_error", false);
    if (l.contains("other_roots"))
      for (const auto& r : l.at("other_roots"))
        s.other_roots.push_back({r[0].get<double>(), r[1].get<double>(), r[2].get<double>()});
    if (l.contains("diagnostics"))
      for (const auto& d : l.at("diagnostics")) s.diagnostics.push_back(d.get<std::string>());
    report.limit = std::move(s);
  }
  if (doc.contains("polynomials")) {
    for (const auto& e : doc.at("polynomials")) {
      PolynomialSection p;
      p.n = e.at("n").get<long>();
      for (const auto& c : e.at("coefficients"))
        p.coefficients.push_back(json_to_bigint(c, "polynomials.coefficients"));
      report.polynomials.push_back(std::move(p));
    }
  }
  if (doc.contains("distributions")) {
    for (const auto& e : doc.at("distributions")) {
      DistributionSection d;
      d.n = e.at("n").get<long>();
      d.kind = e.value("kind", "");
      for (const auto& w : e.at("weights"))
        d.weights.push_back(json_to_bigint(w, "distributions.weights"));
      d.total = json_to_bigint(e.at("total"), "distributions.total");
      if (e.contains("probabilities"))
        for (const auto& q : e.at("probabilities"))
          d.probabilities.push_back(json_to_rational(q, "distributions.probabilities"));
      report.distributions.push_back(std::move(d));
    }
  }
  if (doc.contains("convergence")) {
    ConvergenceSection c;
    for (const auto& e : doc.at("convergence").at("rows")) {
      ConvergenceRow r;
      r.n = e.at("n").get<long>();
      r.ks_distance = e.at("ks_distance").get<double>();
      r.mean_gap = e.at("mean_gap").get<double>();
      r.var_gap = e.at("var_gap").get<double>();
      c.rows.push_back(r);
    }
    report.convergence = std::move(c);
  }
  if (doc.contains("gap")) {
    const Json& g = doc.at("gap");
    GapSection s;
    s.gap = json_to_rational(g.at("gap"), "gap.gap");
    s.bound = json_to_rational(g.at("bound"), "gap.bound");
    s.a_n = json_to_rational(g.at("a_n"), "gap.a_n");
    s.beta = g.at("beta").get<unsigned>();
    s.beta_check = g.at("beta_check").get<bool>();
    report.gap = std::move(s);
  }
  if (doc.contains("discrete")) {
    const Json& d = doc.at("discrete");
    DiscreteLimitSection s;
    s.converged = d.at("converged").get<bool>();
    s.kappa = d.at("kappa").get<long>();
    s.probe_n = d.at("probe_n").get<long>();
    for (const auto& q : d.at("omegas")) s.omegas.push_back(json_to_rational(q, "discrete.omegas"));
    report.discrete = std::move(s);
  }
  if (doc.contains("oracle")) {
    const Json& o = doc.at("oracle");
    OracleVerifySection s;
    s.n_max = o.at("n_max").get<long>();
    for (const auto& n : o.at("checked")) s.checked.push_back(n.get<long>());
    s.ok = o.at("ok").get<bool>();
    s.detail = o.value("detail", "");
    report.oracle = std::move(s);
  }
  return report;
}

std::string convergence_csv(const std::vector<ConvergenceRow>& rows) {
  std::ostringstream os;
  os << "n,ks_distance,mean_gap,var_gap\n";
  char buf[96];
  for (const auto& r : rows) {
    std::snprintf(buf, sizeof(buf), "%ld,%.17g,%.17g,%.17g", r.n, r.ks_distance, r.mean_gap,
                  r.var_gap);
    os << buf << "\n";
  }
  return os.str();
}

}  // namespace gdlim
