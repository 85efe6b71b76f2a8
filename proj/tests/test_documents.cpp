#include <doctest.h>

#include "gdlim/documents.hpp"
#include "gdlim/enumerator.hpp"
#include "gdlim/errors.hpp"

using namespace gdlim;

namespace {

Json family_skeleton() {
  return Json::parse(R"({
    "name": "ladder euler",
    "kind": "euler",
    "matrix": [[[2], [4]], [[0, 2, 4], [0, 4]]],
    "initial_vector": [[1], [0, 1]]
  })");
}

}  // namespace

TEST_CASE("family document parsing") {
  Family fam = parse_family(family_skeleton());
  REQUIRE(fam.matrix.has_value());
  CHECK(fam.kind == DistKind::EulerGenus);
  CHECK(fam.matrix->matrix.at(1, 0) == IntPolynomial{0, 2, 4});
  CHECK(fam.matrix->spider_vector == std::vector<IntPolynomial>{IntPolynomial{1},
                                                                IntPolynomial{1}});
  CHECK(fam.total(2) == IntPolynomial{2, 6, 8});
}

TEST_CASE("family document validation errors carry positions") {
  Json bad = family_skeleton();
  bad["matrix"][1] = Json::array({Json::array({0, 2, 4})});  // row 1 too short
  CHECK_THROWS_WITH_AS(parse_family(bad), doctest::Contains("matrix row 1"), ParseError);

  Json both = family_skeleton();
  both["recurrence"] = Json::array({Json::array({2})});
  CHECK_THROWS_AS(parse_family(both), ParseError);

  Json neither = family_skeleton();
  neither.erase("matrix");
  CHECK_THROWS_AS(parse_family(neither), ParseError);

  Json badkind = family_skeleton();
  badkind["kind"] = "projective";
  CHECK_THROWS_AS(parse_family(badkind), ParseError);

  Json negative = family_skeleton();
  negative["matrix"][0][0] = Json::array({-2});
  CHECK_THROWS_AS(parse_family(negative), NegativeEntry);

  Json rec = Json::parse(R"({
    "name": "r", "kind": "genus",
    "recurrence": [[0, 2]],
    "seeds": [[1], [1]]
  })");
  CHECK_THROWS_WITH_AS(parse_family(rec), doctest::Contains("exactly that many seeds"),
                       ParseError);
}

TEST_CASE("graph document parsing") {
  Json doc = Json::parse(R"({
    "name": "triangle", "vertex_count": 3,
    "edges": [[0, 1], [1, 2], [2, 0]], "roots": [0, 1]
  })");
  GraphDocument g = parse_graph(doc);
  CHECK(g.graph.vertex_count() == 3);
  CHECK(g.roots == std::make_pair(0, 1));

  doc["edges"][0][1] = 9;
  CHECK_THROWS_AS(parse_graph(doc), ParseError);

  Json disconnected = Json::parse(R"({
    "vertex_count": 4, "edges": [[0, 1], [2, 3]]
  })");
  CHECK_THROWS_AS(parse_graph(disconnected), Disconnected);
}

TEST_CASE("seed_graph oracle seeding") {
  Json doc = Json::parse(R"({
    "name": "ladders", "kind": "euler",
    "matrix": [[[2], [4]], [[0, 2, 4], [0, 4]]],
    "seed_graph": {
      "vertex_count": 4,
      "edges": [[0, 1], [0, 2], [1, 3], [2, 3]],
      "roots": [2, 3],
      "seed_split": "edge_sides",
      "seed_order": "ds"
    }
  })");
  Family fam = parse_family(doc);
  REQUIRE(fam.matrix.has_value());
  CHECK(fam.matrix->initial_vector ==
        std::vector<IntPolynomial>{IntPolynomial{1}, IntPolynomial{0, 1}});

  // the same seeding through the vertex split is degenerate for adjacent
  // roots: every embedding keeps adjacent vertices on a common face
  doc["seed_graph"]["seed_split"] = "vertices";
  Family degen = parse_family(doc);
  CHECK(degen.matrix->initial_vector[0].is_zero());
}

TEST_CASE("amalgamation builds the ladder family") {
  Amalgamation am;
  am.g1_vertex_count = 4;
  am.g1_edges = {{0, 1}, {0, 2}, {1, 3}, {2, 3}};
  am.g1_v_roots = {2, 3};
  am.h_vertex_count = 4;
  am.h_edges = {{0, 2}, {1, 3}, {2, 3}};
  am.h_u_roots = {0, 1};
  am.h_v_roots = {2, 3};

  MultiGraph g1 = build_family_member(am, 1);
  CHECK(g1.vertex_count() == 4);
  CHECK(g1.edge_count() == 4);
  MultiGraph g3 = build_family_member(am, 3);
  CHECK(g3.vertex_count() == 8);
  CHECK(g3.edge_count() == 10);
  CHECK(g3.beta() == 3);
}

TEST_CASE("report documents round-trip") {
  ReportDocument report;
  report.command = "analyze";
  report.name = "probe";
  LimitSection limit;
  limit.name = "probe";
  limit.kind = "genus";
  limit.d = Rational(16);
  limit.e = Rational(6, 7);
  limit.v = Rational(8, 147);
  limit.dominant_simple = true;
  limit.primitivity = "unknown";
  limit.limit_case = "normal_limit";
  limit.margin = 8.708497377870817;
  limit.other_roots = {{7.291502622129181, 0.0, 3.1e-15}, {-3.2915026221291805, 0.0, 1.2e-15}};
  limit.diagnostics = {"note"};
  report.limit = limit;
  report.polynomials.push_back(PolynomialSection{3, {BigInt(0), BigInt(288), BigInt(2528)}});
  DistributionSection dist;
  dist.n = 2;
  dist.kind = "genus";
  dist.weights = {BigInt("36893488147419103232"), BigInt(1)};  // 2^65
  dist.total = BigInt("36893488147419103233");
  dist.probabilities = {Rational(BigInt("36893488147419103232"), BigInt("36893488147419103233")),
                        Rational(BigInt(1), BigInt("36893488147419103233"))};
  report.distributions.push_back(dist);
  report.convergence = ConvergenceSection{{{25, 0.35615414838, 0.60606060606, 0.029015342},
                                           {50, 0.24908850295, 0.60606060606, 0.029015342}}};
  GapSection gap;
  gap.gap = Rational(1, 2);
  gap.bound = Rational(1);
  gap.a_n = Rational(1, 2);
  gap.beta = 1;
  gap.beta_check = true;
  report.gap = gap;
  DiscreteLimitSection discrete;
  discrete.converged = true;
  discrete.kappa = 1;
  discrete.probe_n = 32;
  discrete.omegas = {Rational(1, 2), Rational(1, 2)};
  report.discrete = discrete;
  OracleVerifySection oracle;
  oracle.n_max = 3;
  oracle.checked = {1, 2, 3};
  oracle.ok = true;
  oracle.detail = "ok";
  report.oracle = oracle;

  Json emitted = emit_report(report);
  ReportDocument parsed = parse_report(emitted);
  CHECK(parsed == report);
  // a second emit is byte-identical: the document is a fixed point
  CHECK(emit_report(parsed).dump() == emitted.dump());

  // big weights survive the string encoding unchanged
  CHECK(parsed.distributions[0].weights[0] == BigInt("36893488147419103232"));
}

TEST_CASE("csv header contract") {
  std::vector<ConvergenceRow> rows = {{25, 0.25, 0.5, 0.125}};
  std::string csv = convergence_csv(rows);
  CHECK(csv.substr(0, csv.find('\n')) == "n,ks_distance,mean_gap,var_gap");
  CHECK(csv.find("25,") != std::string::npos);
}

TEST_CASE("bundled fixture documents parse") {
  for (const char* name :
       {"claw_genus", "claw_euler", "grid_genus", "grid_euler", "ladders_genus", "ladders_euler",
        "example_q3", "const2"}) {
    Family fam = load_family(std::string(GDLIM_FIXTURE_DIR) + "/" + name + ".json");
    CHECK_FALSE(fam.name.empty());
  }
  for (const char* name :
       {"c3", "c4", "b2", "d3", "k4", "k33", "path4", "rooted_triangle"}) {
    GraphDocument g = load_graph(std::string(GDLIM_FIXTURE_DIR) + "/graphs/" + name + ".json");
    CHECK(g.graph.vertex_count() >= 1);
  }
}
