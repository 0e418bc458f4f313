#include <benchmark/benchmark.h>

#include <string>

#include "isoimp/application_set.hpp"
#include "isoimp/catalog.hpp"
#include "isoimp/isoimp.hpp"

using namespace isoimp;

namespace {

ApplicationSet literal_set(std::size_t n, std::size_t positive, const std::string& prefix) {
  SetBuilder b;
  for (std::size_t i = 0; i < n; ++i) {
    const std::string v = prefix + std::to_string(i);
    b.declare(v);
    b.add(i < positive ? catalog::pos1() : catalog::neg1(), {v});
  }
  return b.build();
}

void BM_LiteralFastPath(benchmark::State& state) {
  const auto n = static_cast<std::size_t>(state.range(0));
  const ApplicationSet s = literal_set(n, n * 3 / 5, "v");
  const ApplicationSet u = literal_set(n * 4 / 5, n / 2, "w");
  for (auto _ : state) benchmark::DoNotOptimize(iso_implies(s, u).answer);
  state.SetComplexityN(static_cast<std::int64_t>(n));
}
BENCHMARK(BM_LiteralFastPath)->RangeMultiplier(4)->Range(16, 16384)->Complexity();

void BM_LiteralForm(benchmark::State& state) {
  const auto n = static_cast<std::size_t>(state.range(0));
  const ApplicationSet s = literal_set(n, n / 2, "v");
  for (auto _ : state) benchmark::DoNotOptimize(literal_form(s));
}
BENCHMARK(BM_LiteralForm)->RangeMultiplier(8)->Range(64, 32768);

}  // namespace

BENCHMARK_MAIN();
