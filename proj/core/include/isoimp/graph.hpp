#pragma once

#include <cstddef>
#include <cstdint>
#include <utility>
#include <vector>

namespace isoimp {

/// Simple undirected graph on vertices 0..n-1. Edges are stored as sorted (low, high) pairs.
class Graph {
 public:
  using Edge = std::pair<unsigned, unsigned>;

  Graph() = default;
  /// Throws InvalidGraph on out-of-range endpoints or self-loops. Duplicate edges collapse.
  Graph(std::size_t n, std::vector<Edge> edges);

  std::size_t num_vertices() const noexcept { return n_; }
  const std::vector<Edge>& edges() const noexcept { return edges_; }
  bool has_edge(unsigned a, unsigned b) const;
  std::size_t degree(unsigned v) const;
  bool has_isolated_vertices() const;
  bool connected() const;

  /// Vertex v becomes perm[v].
  Graph relabeled(const std::vector<unsigned>& perm) const;

  static Graph path(std::size_t n);
  static Graph cycle(std::size_t n);
  static Graph complete(std::size_t n);
  static Graph star(std::size_t leaves);

  friend bool operator==(const Graph&, const Graph&) = default;

 private:
  std::size_t n_ = 0;
  std::vector<Edge> edges_;
};

/// G(n, p) from a 64-bit seed; each pair (a < b) in order draws one number.
Graph random_graph(std::size_t n, double p, std::uint64_t seed);

}  // namespace isoimp
