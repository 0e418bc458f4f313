#include "isoimp/graph.hpp"

#include <algorithm>
#include <random>
#include <string>

#include "isoimp/error.hpp"

namespace isoimp {

Graph::Graph(std::size_t n, std::vector<Edge> edges) : n_(n) {
  for (Edge& e : edges) {
    if (e.first >= n || e.second >= n)
      throw InvalidGraph("edge {" + std::to_string(e.first) + "," + std::to_string(e.second) +
                         "} leaves the vertex range [0, " + std::to_string(n) + ")");
    if (e.first == e.second) throw InvalidGraph("self-loop at vertex " + std::to_string(e.first));
    if (e.first > e.second) std::swap(e.first, e.second);
  }
  std::sort(edges.begin(), edges.end());
  edges.erase(std::unique(edges.begin(), edges.end()), edges.end());
  edges_ = std::move(edges);
}

bool Graph::has_edge(unsigned a, unsigned b) const {
  if (a > b) std::swap(a, b);
  return std::binary_search(edges_.begin(), edges_.end(), Edge{a, b});
}

std::size_t Graph::degree(unsigned v) const {
  return static_cast<std::size_t>(std::count_if(
      edges_.begin(), edges_.end(), [v](const Edge& e) { return e.first == v || e.second == v; }));
}

bool Graph::has_isolated_vertices() const {
  std::vector<bool> touched(n_, false);
  for (const Edge& e : edges_) touched[e.first] = touched[e.second] = true;
  return std::find(touched.begin(), touched.end(), false) != touched.end();
}

bool Graph::connected() const {
  if (n_ == 0) return true;
  std::vector<unsigned> parent(n_);
  for (unsigned v = 0; v < n_; ++v) parent[v] = v;
  auto root = [&](unsigned v) {
    while (parent[v] != v) v = parent[v] = parent[parent[v]];
    return v;
  };
  std::size_t components = n_;
  for (const Edge& e : edges_) {
    unsigned a = root(e.first), b = root(e.second);
    if (a != b) {
      parent[a] = b;
      --components;
    }
  }
  return components == 1;
}

Graph Graph::relabeled(const std::vector<unsigned>& perm) const {
  if (perm.size() != n_) throw InvalidGraph("relabeling has the wrong length");
  std::vector<Edge> out;
  out.reserve(edges_.size());
  for (const Edge& e : edges_) out.emplace_back(perm.at(e.first), perm.at(e.second));
  return Graph(n_, std::move(out));
}

Graph Graph::path(std::size_t n) {
  std::vector<Edge> e;
  for (unsigned v = 0; v + 1 < n; ++v) e.emplace_back(v, v + 1);
  return Graph(n, std::move(e));
}

Graph Graph::cycle(std::size_t n) {
  Graph g = path(n);
  std::vector<Edge> e = g.edges();
  if (n >= 3) e.emplace_back(0, static_cast<unsigned>(n - 1));
  return Graph(n, std::move(e));
}

Graph Graph::complete(std::size_t n) {
  std::vector<Edge> e;
  for (unsigned a = 0; a < n; ++a)
    for (unsigned b = a + 1; b < n; ++b) e.emplace_back(a, b);
  return Graph(n, std::move(e));
}

Graph Graph::star(std::size_t leaves) {
  std::vector<Edge> e;
  for (unsigned v = 1; v <= leaves; ++v) e.emplace_back(0, v);
  return Graph(leaves + 1, std::move(e));
}

Graph random_graph(std::size_t n, double p, std::uint64_t seed) {
  if (!(p >= 0.0 && p <= 1.0)) throw InvalidGraph("edge probability must lie in [0, 1]");
  std::mt19937_64 rng(seed);
  std::vector<Graph::Edge> e;
  for (unsigned a = 0; a < n; ++a)
    for (unsigned b = a + 1; b < n; ++b) {
      // 53 random bits, so the draw does not depend on the standard library's distributions.
      double u = static_cast<double>(rng() >> 11) * 0x1.0p-53;
      if (u < p) e.emplace_back(a, b);
    }
  return Graph(n, std::move(e));
}

}  // namespace isoimp
