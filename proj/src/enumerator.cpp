#include "gdlim/enumerator.hpp"

#include <algorithm>
#include <cstdlib>
#include <string>

#include "gdlim/errors.hpp"

namespace gdlim {

namespace {

// Face tracing walks directed edge sides: state = 2*dart + side. Crossing an
// edge flips the side exactly when the edge is twisted; the side then decides
// whether the walk turns by the rotation successor or predecessor. Orbits
// come in mirror pairs, one per traversal sense, so the face count is half
// the orbit count.
struct FaceTracer {
  const MultiGraph& g;
  std::vector<std::size_t> rot_next;
  std::vector<std::size_t> rot_prev;
  std::vector<std::uint64_t> mark;
  std::uint64_t epoch = 0;

  explicit FaceTracer(const MultiGraph& graph)
      : g(graph),
        rot_next(graph.dart_count()),
        rot_prev(graph.dart_count()),
        mark(2 * graph.dart_count(), 0) {}

  void set_rotation(const std::vector<std::vector<std::size_t>>& order) {
    for (const auto& cycle : order) {
      const std::size_t m = cycle.size();
      for (std::size_t i = 0; i < m; ++i) {
        std::size_t d = cycle[i];
        std::size_t nd = cycle[(i + 1) % m];
        rot_next[d] = nd;
        rot_prev[nd] = d;
      }
    }
  }

  std::size_t next_state(std::size_t state, const std::vector<std::uint8_t>& twisted) const {
    const std::size_t dart = state >> 1;
    const std::size_t side = (state & 1) ^ twisted[dart >> 1];
    const std::size_t across = dart ^ 1;
    const std::size_t next_dart = side == 0 ? rot_next[across] : rot_prev[across];
    return (next_dart << 1) | side;
  }

  int count_faces(const std::vector<std::uint8_t>& twisted, int root_u = -1, int root_v = -1,
                  bool* roots_share_face = nullptr, std::size_t target_edge = SIZE_MAX,
                  bool* edge_sides_same_face = nullptr) {
    ++epoch;
    int orbits = 0;
    bool share = false;
    int edge_orbit[4] = {-1, -1, -1, -1};  // orbit ids of the target edge's four states
    const std::size_t states = mark.size();
    for (std::size_t start = 0; start < states; ++start) {
      if (mark[start] == epoch) continue;
      ++orbits;
      bool has_u = false, has_v = false;
      std::size_t s = start;
      do {
        mark[s] = epoch;
        if (roots_share_face) {
          const int w = g.dart_vertex(s >> 1);
          has_u = has_u || w == root_u;
          has_v = has_v || w == root_v;
        }
        if ((s >> 2) == target_edge) edge_orbit[s & 3] = orbits;
        s = next_state(s, twisted);
      } while (s != start);
      share = share || (has_u && has_v);
    }
    if (orbits % 2 != 0)
      throw Error(ExitCode::Other, "face trace produced an odd orbit count");
    if (roots_share_face) *roots_share_face = share;
    if (edge_sides_same_face) {
      // The edge's four states split over one mirror pair of orbits exactly
      // when both sides of the edge belong to a single face.
      int distinct = 0;
      for (int i = 0; i < 4; ++i) {
        bool fresh = true;
        for (int j = 0; j < i; ++j) fresh = fresh && edge_orbit[j] != edge_orbit[i];
        distinct += fresh;
      }
      if (distinct != 2 && distinct != 4)
        throw Error(ExitCode::Other, "edge-side trace produced an unexpected orbit split");
      *edge_sides_same_face = distinct == 2;
    }
    return orbits / 2;
  }
};

// Rotations are enumerated with the first incident dart anchored, giving
// (deg - 1)! cyclic orders per vertex and each embedding exactly once.
struct RotationEnumerator {
  std::vector<std::vector<std::size_t>> order;  // order[v][0] is the anchor

  explicit RotationEnumerator(const MultiGraph& g) {
    order.resize(g.vertex_count());
    for (std::size_t v = 0; v < g.vertex_count(); ++v) {
      order[v] = g.darts_at(static_cast<int>(v));
      std::sort(order[v].begin() + (order[v].empty() ? 0 : 1), order[v].end());
    }
  }

  bool advance() {
    for (auto& cycle : order) {
      if (cycle.size() <= 2) continue;
      if (std::next_permutation(cycle.begin() + 1, cycle.end())) return true;
    }
    return false;
  }
};

int euler_genus_of(const MultiGraph& g, int faces) {
  return 2 - static_cast<int>(g.vertex_count()) + static_cast<int>(g.edge_count()) - faces;
}

void bump(std::vector<std::uint64_t>& hist, int index) {
  if (index < 0) throw Error(ExitCode::Other, "negative Euler genus from face trace");
  if (hist.size() <= static_cast<std::size_t>(index)) hist.resize(index + 1, 0);
  ++hist[index];
}

EmbeddingDistribution to_distribution(const std::vector<std::uint64_t>& hist, SurfaceKind kind) {
  EmbeddingDistribution d;
  d.kind = kind;
  d.weights.reserve(hist.size());
  d.total = 0;
  for (std::uint64_t w : hist) {
    d.weights.emplace_back(w);
    d.total += w;
  }
  while (!d.weights.empty() && d.weights.back() == 0) d.weights.pop_back();
  return d;
}

void check_budget(const BigInt& required, std::uint64_t budget) {
  if (required > BigInt(budget))
    throw BudgetExceeded("enumeration needs " + required.str() +
                             " embeddings, over the budget of " + BigInt(budget).str(),
                         required.str());
}

std::vector<std::uint8_t> cotree_twist_slots(const MultiGraph& g,
                                             std::vector<std::size_t>* cotree_edges) {
  std::vector<std::uint8_t> in_tree(g.edge_count(), 0);
  for (std::size_t e : spanning_tree(g)) in_tree[e] = 1;
  for (std::size_t e = 0; e < g.edge_count(); ++e)
    if (!in_tree[e]) cotree_edges->push_back(e);
  return in_tree;
}

}  // namespace

std::uint64_t enumeration_budget_from_env() {
  if (const char* env = std::getenv("GDLIM_ENUM_BUDGET")) {
    char* end = nullptr;
    unsigned long long v = std::strtoull(env, &end, 10);
    if (end && *end == '\0' && v > 0) return v;
  }
  return kDefaultEnumerationBudget;
}

int face_count(const MultiGraph& g, const RotationSystem& rho, const TwistAssignment& lambda) {
  if (rho.order.size() != g.vertex_count())
    throw Error(ExitCode::Other, "rotation system has wrong vertex count");
  if (lambda.twisted.size() != g.edge_count())
    throw Error(ExitCode::Other, "twist assignment has wrong edge count");
  FaceTracer tracer(g);
  tracer.set_rotation(rho.order);
  return tracer.count_faces(lambda.twisted);
}

EmbeddingDistribution genus_distribution(const MultiGraph& g, std::uint64_t budget) {
  check_budget(g.rotation_count(), budget);
  FaceTracer tracer(g);
  RotationEnumerator rotations(g);
  const std::vector<std::uint8_t> untwisted(g.edge_count(), 0);
  std::vector<std::uint64_t> hist;
  do {
    tracer.set_rotation(rotations.order);
    const int eg = euler_genus_of(g, tracer.count_faces(untwisted));
    if (eg % 2 != 0)
      throw Error(ExitCode::Other, "odd Euler genus in an orientable embedding");
    bump(hist, eg / 2);
  } while (rotations.advance());
  EmbeddingDistribution d = to_distribution(hist, SurfaceKind::Genus);
  return d;
}

EulerCrosscapResult euler_and_crosscap_distributions(const MultiGraph& g, std::uint64_t budget) {
  std::vector<std::size_t> cotree;
  cotree_twist_slots(g, &cotree);
  check_budget(g.rotation_count() * pow2(static_cast<unsigned>(cotree.size())), budget);

  FaceTracer tracer(g);
  RotationEnumerator rotations(g);
  std::vector<std::uint8_t> twisted(g.edge_count(), 0);
  std::vector<std::uint64_t> euler_hist, crosscap_hist;
  const std::uint64_t masks = std::uint64_t(1) << cotree.size();
  do {
    tracer.set_rotation(rotations.order);
    for (std::uint64_t mask = 0; mask < masks; ++mask) {
      for (std::size_t b = 0; b < cotree.size(); ++b)
        twisted[cotree[b]] = (mask >> b) & 1;
      const int eg = euler_genus_of(g, tracer.count_faces(twisted));
      bump(euler_hist, eg);
      // With tree edges untwisted, the embedding is orientable exactly when
      // every co-tree bit is zero.
      if (mask != 0) bump(crosscap_hist, eg);
    }
  } while (rotations.advance());

  EulerCrosscapResult result{to_distribution(euler_hist, SurfaceKind::EulerGenus),
                             to_distribution(crosscap_hist, SurfaceKind::Crosscap)};
  return result;
}

std::pair<IntPolynomial, IntPolynomial> partial_distributions(const MultiGraph& g, int root_u,
                                                              int root_v, SurfaceKind kind,
                                                              PartialMode mode,
                                                              std::uint64_t budget) {
  if (root_u < 0 || root_v < 0 || root_u >= static_cast<int>(g.vertex_count()) ||
      root_v >= static_cast<int>(g.vertex_count()))
    throw ParseError("partial distributions: root vertex out of range");
  if (kind == SurfaceKind::Crosscap)
    throw Error(ExitCode::Other, "partial distributions support genus and euler kinds");

  std::size_t root_edge = SIZE_MAX;
  if (mode == PartialMode::EdgeSides) {
    for (std::size_t e = 0; e < g.edge_count(); ++e) {
      auto [u, v] = g.edges()[e];
      if ((u == root_u && v == root_v) || (u == root_v && v == root_u)) {
        root_edge = e;
        break;
      }
    }
    if (root_edge == SIZE_MAX)
      throw ParseError("edge-side partial split needs adjacent root vertices");
  }

  std::vector<std::size_t> cotree;
  cotree_twist_slots(g, &cotree);
  const bool with_twists = kind == SurfaceKind::EulerGenus;
  BigInt required = g.rotation_count();
  if (with_twists) required *= pow2(static_cast<unsigned>(cotree.size()));
  check_budget(required, budget);

  FaceTracer tracer(g);
  RotationEnumerator rotations(g);
  std::vector<std::uint8_t> twisted(g.edge_count(), 0);
  std::vector<std::uint64_t> different_hist, same_hist;
  const std::uint64_t masks = with_twists ? (std::uint64_t(1) << cotree.size()) : 1;
  do {
    tracer.set_rotation(rotations.order);
    for (std::uint64_t mask = 0; mask < masks; ++mask) {
      for (std::size_t b = 0; b < cotree.size(); ++b)
        twisted[cotree[b]] = (mask >> b) & 1;
      bool same = false;
      int faces;
      if (mode == PartialMode::VertexFaces)
        faces = tracer.count_faces(twisted, root_u, root_v, &same);
      else
        faces = tracer.count_faces(twisted, -1, -1, nullptr, root_edge, &same);
      const int eg = euler_genus_of(g, faces);
      int index = eg;
      if (kind == SurfaceKind::Genus) {
        if (eg % 2 != 0)
          throw Error(ExitCode::Other, "odd Euler genus in an orientable embedding");
        index = eg / 2;
      }
      bump(same ? same_hist : different_hist, index);
    }
  } while (rotations.advance());

  auto to_poly = [](const std::vector<std::uint64_t>& hist) {
    std::vector<BigInt> coeffs;
    coeffs.reserve(hist.size());
    for (std::uint64_t w : hist) coeffs.emplace_back(w);
    return IntPolynomial(std::move(coeffs));
  };
  return {to_poly(different_hist), to_poly(same_hist)};
}

}  // namespace gdlim
