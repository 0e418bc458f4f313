#include <gtest/gtest.h>

#include <algorithm>
#include <numeric>
#include <random>

#include "isoimp/catalog.hpp"
#include "isoimp/isoimp.hpp"
#include "isoimp/reductions.hpp"
#include "isoimp/semantics.hpp"
#include "oracles.hpp"

namespace isoimp {
namespace {

SearchOptions with_prunes(unsigned bits) {
  SearchOptions o;
  o.engine = Engine::Search;
  o.prunes.count = bits & 1u;
  o.prunes.signature = bits & 2u;
  o.prunes.normalize = bits & 4u;
  o.prunes.symmetry = bits & 8u;
  return o;
}

class PruneCombination : public ::testing::TestWithParam<unsigned> {};

// Every prune combination gives the oracle's answer and the oracle's first witness.
TEST_P(PruneCombination, MatchesOracle) {
  const SearchOptions o = with_prunes(GetParam());
  std::mt19937_64 rng(100 + GetParam());
  const auto pool = catalog::all();
  for (int i = 0; i < 120; ++i) {
    auto [s, u] = testing::random_pair(rng, pool, 6, 5);
    auto expected = oracle_witness(s, u);
    Decision d = iso_implies(s, u, o);
    ASSERT_EQ(d.answer, expected.has_value()) << i;
    EXPECT_EQ(d.witness, expected) << i;
    Decision iso = isomorphic(s, u, o);
    ASSERT_EQ(iso.answer, isomorphic_oracle(s, u)) << i;
    if (iso.answer) EXPECT_TRUE(testing::is_iso_witness(*iso.witness, s, u)) << i;
  }
}

INSTANTIATE_TEST_SUITE_P(AllSixteen, PruneCombination, ::testing::Range(0u, 16u));

TEST(Prunes, CountPruneFiresOnCardinality) {
  ApplicationSet s = SetBuilder({"x", "y"}).add(catalog::or2(), {"x", "y"}).build();
  ApplicationSet u = SetBuilder({"x", "y"}).add(catalog::and2(), {"x", "y"}).build();
  Decision d = iso_implies(s, u, with_prunes(0b1111));
  EXPECT_FALSE(d.answer);
  EXPECT_EQ(d.stats.prune_count, 1u);
  EXPECT_EQ(d.stats.nodes, 0u);
}

TEST(Prunes, SymmetryCutsInterchangeableVariables) {
  // Seven interchangeable leaves around one centre; the star cannot hold a triangle.
  Graph star = Graph::star(6);
  auto [s, u] = subgraph_instance(star, Graph::complete(3), GuardMode::Plain);
  Decision with = iso_implies(s, u, with_prunes(0b1111));
  Decision without = iso_implies(s, u, with_prunes(0b0111));
  EXPECT_FALSE(with.answer);
  EXPECT_FALSE(without.answer);
  EXPECT_LE(with.stats.nodes, without.stats.nodes);
}

std::vector<bool> essential(const ApplicationSet& s) {
  std::vector<bool> out(s.num_vars(), false);
  for (std::uint64_t r = 0; r < (std::uint64_t{1} << s.num_vars()); ++r) {
    Assignment a = Assignment::from_rank(s.num_vars(), r);
    for (VarId v = 0; v < s.num_vars(); ++v) {
      std::vector<bool> bits;
      for (VarId w = 0; w < s.num_vars(); ++w) bits.push_back(w == v ? !a[w] : a[w]);
      if (eval_set(s, a) != eval_set(s, Assignment(bits))) out[v] = true;
    }
  }
  return out;
}

// Whenever a witness exists, one also exists that sends the smaller semantic
// support entirely into the larger one.
TEST(Prunes, NormalizedWitnessExists) {
  std::mt19937_64 rng(7);
  const auto pool = catalog::all();
  int checked = 0;
  for (int i = 0; i < 300; ++i) {
    auto [s0, u0] = testing::random_pair(rng, pool, 5, 3);
    auto [s, u] = over_union(s0, u0);
    if (!iso_implies_oracle(s, u) || count_sat(s) == 0) continue;
    const auto es = essential(s), eu = essential(u);
    const auto ks = std::count(es.begin(), es.end(), true), ku = std::count(eu.begin(), eu.end(), true);
    std::vector<VarId> images(s.num_vars());
    std::iota(images.begin(), images.end(), VarId{0});
    bool found = false;
    do {
      bool normal = true;
      for (VarId v = 0; v < images.size(); ++v) {
        if (ks >= ku && !es[v] && eu[images[v]]) normal = false;
        if (ks < ku && es[v] && !eu[images[v]]) normal = false;
      }
      if (normal && implies(apply_permutation(Permutation(images), s), u)) found = true;
    } while (!found && std::next_permutation(images.begin(), images.end()));
    EXPECT_TRUE(found) << i;
    ++checked;
  }
  EXPECT_GT(checked, 20);
}

}  // namespace
}  // namespace isoimp
