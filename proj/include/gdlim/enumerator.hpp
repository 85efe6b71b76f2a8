#pragma once

#include <cstdint>
#include <utility>
#include <vector>

#include "gdlim/distribution.hpp"
#include "gdlim/multigraph.hpp"
#include "gdlim/polynomial.hpp"

namespace gdlim {

// Per-vertex cyclic order of incident darts.
struct RotationSystem {
  std::vector<std::vector<std::size_t>> order;  // order[v] lists darts at v
};

// One twist bit per edge; spanning-tree edges stay untwisted, so exactly the
// beta co-tree bits vary.
struct TwistAssignment {
  std::vector<std::uint8_t> twisted;  // indexed by edge
};

inline constexpr std::uint64_t kDefaultEnumerationBudget = 10'000'000;

std::uint64_t enumeration_budget_from_env();

// Number of faces of the embedding described by (rho, lambda): orbits of the
// side-respecting trace over directed edge sides.
int face_count(const MultiGraph& g, const RotationSystem& rho, const TwistAssignment& lambda);

// Exhaustive pure-rotation enumeration; weight at genus g counts embeddings
// in the orientable surface of genus g. Throws BudgetExceeded.
EmbeddingDistribution genus_distribution(const MultiGraph& g,
                                         std::uint64_t budget = kDefaultEnumerationBudget);

struct EulerCrosscapResult {
  EmbeddingDistribution euler;
  EmbeddingDistribution crosscap;
};

// Exhaustive (rotation, twist) enumeration over T-rotation systems. The
// Euler histogram covers all embeddings; the crosscap histogram covers the
// nonorientable ones only (some co-tree twist bit set).
EulerCrosscapResult euler_and_crosscap_distributions(
    const MultiGraph& g, std::uint64_t budget = kDefaultEnumerationBudget);

// How embeddings are split into the two partial classes.
//   VertexFaces: by whether the root vertices lie on a common face boundary.
//   EdgeSides:   by whether the two sides of the edge joining the roots see
//                two distinct faces; requires adjacent roots. This is the
//                type split that ladder production matrices act on.
enum class PartialMode { VertexFaces, EdgeSides };

// Partial distributions relative to two root vertices, returned in
// (different, same) order. The two parts sum to the full distribution of the
// requested kind.
std::pair<IntPolynomial, IntPolynomial> partial_distributions(
    const MultiGraph& g, int root_u, int root_v, SurfaceKind kind,
    PartialMode mode = PartialMode::VertexFaces,
    std::uint64_t budget = kDefaultEnumerationBudget);

}  // namespace gdlim
