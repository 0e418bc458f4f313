#include <benchmark/benchmark.h>

#include <bitset>
#include <string>

#include "isoimp/catalog.hpp"
#include "isoimp/classifier.hpp"

using namespace isoimp;

namespace {

void BM_ClassifyCatalog(benchmark::State& state) {
  const auto language = catalog::all();
  for (auto _ : state) benchmark::DoNotOptimize(classify(language));
}
BENCHMARK(BM_ClassifyCatalog);

// Every Boolean function of arity 3.
void BM_PropertiesArity3(benchmark::State& state) {
  std::vector<ConstraintPtr> all;
  for (unsigned t = 0; t < 256; ++t) all.push_back(make_constraint("R", 3, std::bitset<8>(t).to_string()));
  for (auto _ : state)
    for (const ConstraintPtr& c : all) benchmark::DoNotOptimize(constraint_properties(*c));
  state.SetItemsProcessed(state.iterations() * 256);
}
BENCHMARK(BM_PropertiesArity3);

void BM_PropertiesWide(benchmark::State& state) {
  const auto arity = static_cast<std::size_t>(state.range(0));
  std::string bits(std::size_t{1} << arity, '0');
  for (std::size_t i = 0; i < bits.size(); ++i)
    if (std::bitset<32>(i).count() % 2 == 1) bits[i] = '1';
  const ConstraintPtr c = make_constraint("ODD", static_cast<unsigned>(arity), bits);
  for (auto _ : state) benchmark::DoNotOptimize(constraint_properties(*c));
}
BENCHMARK(BM_PropertiesWide)->DenseRange(4, 10, 2);

}  // namespace

BENCHMARK_MAIN();
