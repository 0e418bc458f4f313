#include <benchmark/benchmark.h>

#include "isoimp/graph.hpp"
#include "isoimp/isoimp.hpp"
#include "isoimp/reductions.hpp"

using namespace isoimp;

namespace {

SearchOptions search_only() {
  SearchOptions o;
  o.engine = Engine::Search;
  return o;
}

// Random edges over a Hamiltonian cycle, so no vertex is isolated.
Graph random_host(std::size_t n, std::uint64_t seed) {
  auto edges = random_graph(n, 0.5, seed).edges();
  for (unsigned v = 0; v < n; ++v) edges.emplace_back(v, static_cast<unsigned>((v + 1) % n));
  return Graph(n, edges);
}

// Pattern is a path on n - 1 vertices.
void BM_SubgraphSearch(benchmark::State& state) {
  const auto n = static_cast<std::size_t>(state.range(0));
  const Graph g = random_host(n, 7 + n);
  const Graph h = Graph::path(n - 1);
  auto [s, u] = subgraph_instance(g, h, GuardMode::T);
  const SearchOptions o = search_only();
  std::uint64_t nodes = 0;
  for (auto _ : state) {
    Decision d = iso_implies(s, u, o);
    nodes = d.stats.nodes;
    benchmark::DoNotOptimize(d.answer);
  }
  state.counters["nodes"] = static_cast<double>(nodes);
}
BENCHMARK(BM_SubgraphSearch)->DenseRange(5, 9, 1);

void BM_HampathSearch(benchmark::State& state) {
  const auto n = static_cast<std::size_t>(state.range(0));
  auto [s, u] = hampath_instance(Graph::cycle(n));
  const SearchOptions o = search_only();
  for (auto _ : state) benchmark::DoNotOptimize(iso_implies(s, u, o).answer);
}
BENCHMARK(BM_HampathSearch)->DenseRange(4, 8, 2);

void BM_OracleScan(benchmark::State& state) {
  const auto n = static_cast<std::size_t>(state.range(0));
  auto [s, u] = subgraph_instance(Graph::complete(n), Graph::path(n), GuardMode::Plain);
  for (auto _ : state) benchmark::DoNotOptimize(iso_implies_oracle(s, u));
}
BENCHMARK(BM_OracleScan)->DenseRange(3, 4, 1);

}  // namespace

BENCHMARK_MAIN();
