#include <doctest.h>

#include <random>

#include "gdlim/enumerator.hpp"
#include "gdlim/errors.hpp"
#include "gdlim/production.hpp"

using namespace gdlim;

namespace {

MultiGraph triangle() { return MultiGraph(3, {{0, 1}, {1, 2}, {2, 0}}); }
MultiGraph bouquet2() { return MultiGraph(1, {{0, 0}, {0, 0}}); }
MultiGraph dipole3() { return MultiGraph(2, {{0, 1}, {0, 1}, {0, 1}}); }
MultiGraph k4() { return MultiGraph(4, {{0, 1}, {0, 2}, {0, 3}, {1, 2}, {1, 3}, {2, 3}}); }
MultiGraph k33() {
  return MultiGraph(6, {{0, 3}, {0, 4}, {0, 5}, {1, 3}, {1, 4}, {1, 5}, {2, 3}, {2, 4}, {2, 5}});
}
MultiGraph cycle(int n) {
  std::vector<std::pair<int, int>> edges;
  for (int i = 0; i < n; ++i) edges.emplace_back(i, (i + 1) % n);
  return MultiGraph(n, std::move(edges));
}

MultiGraph random_connected_multigraph(std::mt19937& rng) {
  std::uniform_int_distribution<int> nv(2, 6);
  const int n = nv(rng);
  std::vector<std::pair<int, int>> edges;
  std::uniform_int_distribution<int> any(0, n - 1);
  for (int v = 1; v < n; ++v) edges.emplace_back(std::uniform_int_distribution<int>(0, v - 1)(rng), v);
  std::uniform_int_distribution<int> extra(0, 2);
  for (int e = extra(rng); e > 0; --e) edges.emplace_back(any(rng), any(rng));  // loops allowed
  return MultiGraph(n, std::move(edges));
}

}  // namespace

TEST_CASE("spanning trees") {
  MultiGraph path(4, {{0, 1}, {1, 2}, {2, 3}});
  CHECK(spanning_tree(path).size() == 3);  // a tree keeps every edge

  MultiGraph c3 = triangle();
  CHECK(spanning_tree(c3).size() == 2);
  CHECK(c3.beta() == 1);

  MultiGraph b2 = bouquet2();
  CHECK(spanning_tree(b2).empty());
  CHECK(b2.beta() == 2);

  CHECK_THROWS_AS(MultiGraph(4, {{0, 1}, {2, 3}}), Disconnected);
}

TEST_CASE("face tracing on the triangle") {
  MultiGraph g = triangle();
  RotationSystem rho{{{0, 5}, {1, 2}, {3, 4}}};  // the unique rotation system
  TwistAssignment untwisted{{0, 0, 0}};
  CHECK(face_count(g, rho, untwisted) == 2);  // sphere

  // twist the co-tree edge: N_1, a single face
  std::vector<std::size_t> tree = spanning_tree(g);
  TwistAssignment twisted{{0, 0, 0}};
  std::vector<char> in_tree(3, 0);
  for (std::size_t e : tree) in_tree[e] = 1;
  for (std::size_t e = 0; e < 3; ++e)
    if (!in_tree[e]) twisted.twisted[e] = 1;
  CHECK(face_count(g, rho, twisted) == 1);
}

TEST_CASE("face tracing on the bouquet of two loops") {
  MultiGraph g = bouquet2();
  // nested loops embed in the sphere: V - E + F = 1 - 2 + 3 = 2
  RotationSystem nested{{{0, 1, 2, 3}}};
  TwistAssignment untwisted{{0, 0}};
  CHECK(face_count(g, nested, untwisted) == 3);
  // interleaved loops give the torus embedding with one face
  RotationSystem interleaved{{{0, 2, 1, 3}}};
  CHECK(face_count(g, interleaved, untwisted) == 1);
}

TEST_CASE("genus distributions of the standard small graphs") {
  CHECK(polynomial_from_distribution(genus_distribution(bouquet2())) == IntPolynomial{4, 2});
  CHECK(polynomial_from_distribution(genus_distribution(dipole3())) == IntPolynomial{2, 2});
  CHECK(polynomial_from_distribution(genus_distribution(k4())) == IntPolynomial{2, 14});
  CHECK(polynomial_from_distribution(genus_distribution(k33())) == IntPolynomial{0, 40, 24});

  // any tree is a point mass at genus 0 with weight prod (deg - 1)!
  MultiGraph star(5, {{0, 1}, {0, 2}, {0, 3}, {0, 4}});
  EmbeddingDistribution d = genus_distribution(star);
  CHECK(polynomial_from_distribution(d) == IntPolynomial{6});
  CHECK(d.total == star.rotation_count());
}

TEST_CASE("euler and crosscap distributions of small graphs") {
  auto c3 = euler_and_crosscap_distributions(triangle());
  CHECK(polynomial_from_distribution(c3.euler) == IntPolynomial{1, 1});
  CHECK(polynomial_from_distribution(c3.crosscap) == IntPolynomial{0, 1});

  auto c4 = euler_and_crosscap_distributions(cycle(4));
  CHECK(polynomial_from_distribution(c4.euler) == IntPolynomial{1, 1});

  // trees have no nonorientable embeddings at all
  MultiGraph path(3, {{0, 1}, {1, 2}});
  auto tree = euler_and_crosscap_distributions(path);
  CHECK(polynomial_from_distribution(tree.euler) == IntPolynomial{1});
  CHECK(tree.crosscap.total == 0);
  CHECK(tree.crosscap.weights.empty());
}

TEST_CASE("count conservation and the Euler identity on a corpus") {
  std::mt19937 rng(31337);
  std::vector<MultiGraph> corpus = {triangle(), bouquet2(), dipole3(), k4(), cycle(4), cycle(5)};
  for (int i = 0; i < 25; ++i) corpus.push_back(random_connected_multigraph(rng));
  for (const auto& g : corpus) {
    BigInt rotations = g.rotation_count();
    EmbeddingDistribution genus = genus_distribution(g);
    CHECK(genus.total == rotations);
    auto ec = euler_and_crosscap_distributions(g);
    CHECK(ec.euler.total == rotations * pow2(static_cast<unsigned>(g.beta())));
    CHECK(ec.crosscap.total == ec.euler.total - genus.total);
    // Euler identity: E(x) = Gamma(x^2) + Gamma~(x), coefficientwise
    IntPolynomial gamma = polynomial_from_distribution(genus);
    IntPolynomial crosscap = polynomial_from_distribution(ec.crosscap);
    CHECK(polynomial_from_distribution(ec.euler) == gamma.compose_square() + crosscap);
    // genus support check: 2 - V + E - F stays even and nonnegative
    for (std::size_t j = 0; j < genus.weights.size(); ++j) CHECK(genus.weights[j] >= 0);
  }
}

TEST_CASE("partial distributions") {
  // single edge with both ends rooted: one embedding, one face: S = 1, D = 0
  MultiGraph edge(2, {{0, 1}});
  auto [d0, s0] = partial_distributions(edge, 0, 1, SurfaceKind::Genus);
  CHECK(d0.is_zero());
  CHECK(s0 == IntPolynomial{1});

  // triangle with pendant roots: D + S equals the genus polynomial
  MultiGraph h(5, {{0, 1}, {1, 2}, {2, 0}, {0, 3}, {1, 4}});
  auto [dh, sh] = partial_distributions(h, 3, 4, SurfaceKind::Genus);
  CHECK(dh + sh == polynomial_from_distribution(genus_distribution(h)));
  CHECK_FALSE(dh.is_zero());
  CHECK_FALSE(sh.is_zero());
}

TEST_CASE("path-like amalgamation matches the production matrix") {
  MultiGraph h(5, {{0, 1}, {1, 2}, {2, 0}, {0, 3}, {1, 4}});
  // two copies glued: v of the first copy is u of the second
  MultiGraph chain(9, {{0, 1}, {1, 2}, {2, 0}, {0, 3}, {1, 4},
                       {5, 6}, {6, 7}, {7, 5}, {5, 4}, {6, 8}});

  for (SurfaceKind kind : {SurfaceKind::Genus, SurfaceKind::EulerGenus}) {
    auto [dh, sh] = partial_distributions(h, 3, 4, kind);
    auto [dc, sc] = partial_distributions(chain, 3, 8, kind);
    // the four-case recursion: D_2 = (D+S) D + D S, S_2 = S S
    CHECK(dc == (dh + sh) * dh + dh * sh);
    CHECK(sc == sh * sh);

    ProductionMatrix m = pathlike_matrix(dh, sh);
    FamilySpec fam = FamilySpec::make(std::move(m), {dh, sh}, {},
                                      kind == SurfaceKind::Genus ? DistKind::Genus
                                                                 : DistKind::EulerGenus,
                                      "pathlike");
    auto v2 = evolve_vector(fam, 2);
    CHECK(v2[0] == dc);
    CHECK(v2[1] == sc);
  }
}

TEST_CASE("enumeration budget") {
  CHECK_THROWS_AS(genus_distribution(k4(), 10), BudgetExceeded);
  try {
    genus_distribution(k4(), 10);
  } catch (const BudgetExceeded& ex) {
    CHECK(ex.required_count == "16");
  }
  // crosscap partials are not defined
  CHECK_THROWS_AS(partial_distributions(triangle(), 0, 1, SurfaceKind::Crosscap), Error);
}

TEST_CASE("euler genus range and orientable parity on random embeddings") {
  // 0 <= euler genus <= beta for any embedding; even when untwisted
  std::mt19937 rng(2718281);
  for (int trial = 0; trial < 60; ++trial) {
    MultiGraph g = random_connected_multigraph(rng);
    RotationSystem rho;
    rho.order.resize(g.vertex_count());
    for (std::size_t v = 0; v < g.vertex_count(); ++v) {
      rho.order[v] = g.darts_at(static_cast<int>(v));
      std::shuffle(rho.order[v].begin(), rho.order[v].end(), rng);
    }
    std::vector<std::size_t> tree = spanning_tree(g);
    std::vector<char> in_tree(g.edge_count(), 0);
    for (std::size_t e : tree) in_tree[e] = 1;
    TwistAssignment untwisted{std::vector<std::uint8_t>(g.edge_count(), 0)};
    TwistAssignment twisted{std::vector<std::uint8_t>(g.edge_count(), 0)};
    std::bernoulli_distribution flip(0.5);
    for (std::size_t e = 0; e < g.edge_count(); ++e)
      if (!in_tree[e]) twisted.twisted[e] = flip(rng);

    int f0 = face_count(g, rho, untwisted);
    int eg0 = 2 - static_cast<int>(g.vertex_count()) + static_cast<int>(g.edge_count()) - f0;
    CHECK(eg0 >= 0);
    CHECK(eg0 <= static_cast<int>(g.beta()));
    CHECK(eg0 % 2 == 0);  // pure rotation systems give orientable surfaces

    int f1 = face_count(g, rho, twisted);
    int eg1 = 2 - static_cast<int>(g.vertex_count()) + static_cast<int>(g.edge_count()) - f1;
    CHECK(eg1 >= 0);
    CHECK(eg1 <= static_cast<int>(g.beta()));
  }
}
