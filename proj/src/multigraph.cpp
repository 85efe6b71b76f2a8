#include "gdlim/multigraph.hpp"

#include <queue>
#include <sstream>

#include "gdlim/errors.hpp"

namespace gdlim {

MultiGraph::MultiGraph(std::size_t vertex_count, std::vector<std::pair<int, int>> edges)
    : vertex_count_(vertex_count), edges_(std::move(edges)) {
  if (vertex_count_ == 0) throw ParseError("graph needs at least one vertex");
  darts_at_.resize(vertex_count_);
  for (std::size_t e = 0; e < edges_.size(); ++e) {
    auto [u, v] = edges_[e];
    if (u < 0 || v < 0 || u >= static_cast<int>(vertex_count_) ||
        v >= static_cast<int>(vertex_count_)) {
      std::ostringstream os;
      os << "edge " << e << " = (" << u << "," << v << ") has an endpoint out of range [0,"
         << vertex_count_ << ")";
      throw ParseError(os.str());
    }
    darts_at_[u].push_back(2 * e);
    darts_at_[v].push_back(2 * e + 1);
  }
  if (edges_.size() + 1 < vertex_count_)
    throw Disconnected("graph has too few edges to be connected");
  // Connectivity via BFS over darts.
  std::vector<char> seen(vertex_count_, 0);
  std::queue<int> queue;
  queue.push(0);
  seen[0] = 1;
  std::size_t reached = 1;
  while (!queue.empty()) {
    int v = queue.front();
    queue.pop();
    for (std::size_t d : darts_at_[v]) {
      int w = dart_vertex(d ^ 1);
      if (!seen[w]) {
        seen[w] = 1;
        ++reached;
        queue.push(w);
      }
    }
  }
  if (reached != vertex_count_) throw Disconnected("graph is not connected");
}

BigInt MultiGraph::rotation_count() const {
  BigInt total = 1;
  for (std::size_t v = 0; v < vertex_count_; ++v) {
    std::size_t d = degree(v);
    if (d > 1) total *= factorial(static_cast<unsigned>(d - 1));
  }
  return total;
}

std::vector<std::size_t> spanning_tree(const MultiGraph& g) {
  std::vector<char> seen(g.vertex_count(), 0);
  std::vector<std::size_t> tree;
  std::queue<int> queue;
  queue.push(0);
  seen[0] = 1;
  while (!queue.empty()) {
    int v = queue.front();
    queue.pop();
    for (std::size_t d : g.darts_at(v)) {
      int w = g.dart_vertex(d ^ 1);
      if (!seen[w]) {
        seen[w] = 1;
        tree.push_back(d >> 1);
        queue.push(w);
      }
    }
  }
  if (tree.size() + 1 != g.vertex_count()) throw Disconnected("graph is not connected");
  return tree;
}

}  // namespace gdlim
