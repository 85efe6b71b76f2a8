#pragma once

#include <cstddef>
#include <optional>
#include <utility>
#include <vector>

#include "gdlim/exact.hpp"

namespace gdlim {

// Connected multigraph; loops and parallel edges allowed. Edge e owns the
// two darts 2e (at u) and 2e+1 (at v); a loop owns two darts at one vertex.
class MultiGraph {
 public:
  MultiGraph(std::size_t vertex_count, std::vector<std::pair<int, int>> edges);

  std::size_t vertex_count() const { return vertex_count_; }
  std::size_t edge_count() const { return edges_.size(); }
  const std::vector<std::pair<int, int>>& edges() const { return edges_; }

  std::size_t dart_count() const { return 2 * edges_.size(); }
  int dart_vertex(std::size_t dart) const {
    const auto& e = edges_[dart >> 1];
    return (dart & 1) ? e.second : e.first;
  }
  const std::vector<std::size_t>& darts_at(int v) const { return darts_at_[v]; }
  std::size_t degree(int v) const { return darts_at_[v].size(); }

  // Cycle rank |E| - |V| + 1.
  std::size_t beta() const { return edges_.size() - vertex_count_ + 1; }

  // Number of pure rotation systems, prod over vertices of (deg - 1)!.
  BigInt rotation_count() const;

 private:
  std::size_t vertex_count_;
  std::vector<std::pair<int, int>> edges_;
  std::vector<std::vector<std::size_t>> darts_at_;
};

// Deterministic lowest-index BFS spanning tree; returns edge indices.
std::vector<std::size_t> spanning_tree(const MultiGraph& g);

}  // namespace gdlim
