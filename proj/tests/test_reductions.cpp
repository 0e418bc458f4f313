#include <gtest/gtest.h>

#include <random>

#include "isoimp/catalog.hpp"
#include "isoimp/classifier.hpp"
#include "isoimp/error.hpp"
#include "isoimp/isoimp.hpp"
#include "isoimp/reductions.hpp"
#include "isoimp/semantics.hpp"
#include "oracles.hpp"

namespace isoimp {
namespace {

constexpr GuardMode kOrModes[] = {GuardMode::Plain, GuardMode::T, GuardMode::FT, GuardMode::NandF,
                                  GuardMode::NandFT};

bool decide(const InstancePair& p) { return iso_implies(p.first, p.second).answer; }

Graph triangle() { return Graph::complete(3); }
Graph two_path() { return Graph::path(3); }

TEST(GuardModes, RoundTripAndFamilies) {
  for (GuardMode m : {GuardMode::Plain, GuardMode::T, GuardMode::F, GuardMode::FT, GuardMode::NandF,
                      GuardMode::NandFT})
    EXPECT_EQ(parse_guard_mode(to_string(m)), m);
  EXPECT_FALSE(parse_guard_mode("tf").has_value());
  EXPECT_FALSE(valid_or_mode(GuardMode::F));
  EXPECT_TRUE(valid_or_mode(GuardMode::NandFT));
  EXPECT_FALSE(valid_iff_mode(GuardMode::NandF));
  EXPECT_TRUE(valid_iff_mode(GuardMode::F));
  EXPECT_TRUE(valid_xor_mode(GuardMode::FT));
  EXPECT_FALSE(valid_xor_mode(GuardMode::T));
}

TEST(GraphToOrSet, TrianglePlain) {
  ApplicationSet s = graph_to_or_set(triangle(), GuardMode::Plain);
  ApplicationSet expected = SetBuilder({"x_1", "x_2", "x_3"})
                                .add(catalog::or2(), {"x_1", "x_2"})
                                .add(catalog::or2(), {"x_1", "x_3"})
                                .add(catalog::or2(), {"x_2", "x_3"})
                                .build();
  EXPECT_EQ(s, expected);
}

TEST(GraphToOrSet, SingleEdgeGuarded) {
  Graph edge(2, {{0, 1}});
  ApplicationSet t = graph_to_or_set(edge, GuardMode::T);
  EXPECT_EQ(t, SetBuilder({"t", "x_1", "x_2"}).add(catalog::t_or(), {"t", "x_1", "x_2"}).build());
  ApplicationSet f = graph_to_or_set(edge, GuardMode::NandF);
  EXPECT_EQ(f, SetBuilder({"f", "x_1", "x_2"}).add(catalog::f_nand(), {"f", "x_1", "x_2"}).build());
  ApplicationSet ft = graph_to_or_set(edge, GuardMode::FT);
  EXPECT_EQ(ft.universe(), (std::vector<std::string>{"f", "t", "x_1", "x_2"}));
}

TEST(GraphToOrSet, Rejections) {
  EXPECT_THROW(graph_to_or_set(Graph(3, {{0, 1}}), GuardMode::Plain), InvalidGraph);
  EXPECT_THROW(graph_to_or_set(triangle(), GuardMode::F), InvalidInstance);
}

TEST(Subgraph, Examples) {
  EXPECT_TRUE(decide(subgraph_instance(triangle(), two_path(), GuardMode::Plain)));
  EXPECT_FALSE(decide(subgraph_instance(two_path(), triangle(), GuardMode::Plain)));
  EXPECT_TRUE(decide(subgraph_instance(Graph::cycle(5), Graph::cycle(5), GuardMode::Plain)));
  EXPECT_TRUE(subgraph_bruteforce(triangle(), two_path()));
  EXPECT_FALSE(subgraph_bruteforce(two_path(), triangle()));
  EXPECT_THROW(subgraph_bruteforce(triangle(), Graph(2, {})), InvalidGraph);
}

TEST(Subgraph, DisjointNamesSharedGuards) {
  auto [s, u] = subgraph_instance(two_path(), triangle(), GuardMode::FT);
  EXPECT_EQ(s.universe(), (std::vector<std::string>{"f", "t", "x_1_1", "x_1_2", "x_1_3"}));
  EXPECT_EQ(u.universe(), (std::vector<std::string>{"f", "t", "x_1", "x_2", "x_3"}));
}

// All pairs of graphs on at most four vertices, every OR-family mode.
TEST(Subgraph, MatchesBruteForceSmall) {
  const auto graphs = testing::graphs_up_to_isomorphism(4);
  ASSERT_EQ(graphs.size(), 10u);
  for (GuardMode mode : kOrModes)
    for (const Graph& g : graphs)
      for (const Graph& h : graphs)
        ASSERT_EQ(decide(subgraph_instance(g, h, mode)), subgraph_bruteforce(g, h)) << to_string(mode);
}

TEST(Subgraph, GraphCountsUpToIsomorphism) {
  EXPECT_EQ(testing::graphs_up_to_isomorphism(5).size(), 33u);
}

std::vector<VarId> forced(const ApplicationSet& s, bool value) {
  std::vector<VarId> out;
  for (VarId v = 0; v < s.num_vars(); ++v) {
    ApplicationSet unit = SetBuilder(s.universe())
                              .add(value ? catalog::pos1() : catalog::neg1(), {s.var_name(v)})
                              .build();
    if (implies(s, unit)) out.push_back(v);
  }
  return out;
}

TEST(Guards, UniqueForcedVariables) {
  for (std::uint64_t seed = 1; seed <= 40; ++seed) {
    Graph g = random_graph(6, 0.5, seed);
    if (g.has_isolated_vertices()) continue;
    ApplicationSet t = graph_to_or_set(g, GuardMode::T);
    EXPECT_EQ(forced(t, true), std::vector<VarId>{*t.find("t")});
    ApplicationSet ft = graph_to_or_set(g, GuardMode::FT);
    EXPECT_EQ(forced(ft, true), std::vector<VarId>{*ft.find("t")});
    EXPECT_EQ(forced(ft, false), std::vector<VarId>{*ft.find("f")});
    ApplicationSet nf = graph_to_or_set(g, GuardMode::NandF);
    EXPECT_EQ(forced(nf, false), std::vector<VarId>{*nf.find("f")});
  }
}

TEST(HamPath, Examples) {
  EXPECT_TRUE(decide(hampath_instance(Graph::path(3))));
  EXPECT_FALSE(decide(hampath_instance(Graph::star(3))));
  EXPECT_TRUE(decide(hampath_instance(Graph::complete(4))));
  EXPECT_THROW(hampath_instance(Graph(4, {{0, 1}, {2, 3}})), InvalidGraph);
}

TEST(HamPath, Naming) {
  auto [s, u] = hampath_instance(Graph::path(3));
  EXPECT_EQ(s.universe(), (std::vector<std::string>{"y_1_1", "y_1_2", "y_1_3"}));
  EXPECT_EQ(u, SetBuilder({"y_1", "y_2", "y_3"})
                   .add(catalog::or2(), {"y_1", "y_2"})
                   .add(catalog::or2(), {"y_2", "y_3"})
                   .build());
}

TEST(HamPath, MatchesPathEnumeration) {
  for (const Graph& g : testing::graphs_up_to_isomorphism(5)) {
    if (!g.connected()) continue;
    EXPECT_EQ(decide(hampath_instance(g)), hamiltonian_path_bruteforce(g));
  }
}

ThreePartitionInstance tp(unsigned m, unsigned b, std::vector<unsigned> sizes) {
  ThreePartitionInstance inst;
  inst.m = m;
  inst.bound = b;
  inst.sizes = std::move(sizes);
  return inst;
}

TEST(ThreePartition, Validation) {
  EXPECT_NO_THROW(tp(1, 12, {4, 4, 4}).validate());
  EXPECT_THROW(tp(1, 12, {4, 4, 5}).validate(), InvalidInstance);
  EXPECT_THROW(tp(1, 12, {6, 6}).validate(), InvalidInstance);
  EXPECT_THROW(tp(1, 3, {0, 1, 2}).validate(), InvalidInstance);
  auto strict = tp(2, 12, {5, 5, 5, 3, 3, 3});
  EXPECT_NO_THROW(strict.validate());
  strict.strict = true;
  EXPECT_THROW(strict.validate(), InvalidInstance);
}

TEST(ThreePartition, BruteForceExamples) {
  EXPECT_TRUE(three_partition_bruteforce(tp(1, 12, {4, 4, 4})));
  EXPECT_TRUE(three_partition_bruteforce(tp(2, 12, {4, 4, 4, 4, 4, 4})));
  EXPECT_FALSE(three_partition_bruteforce(tp(2, 12, {5, 5, 5, 3, 3, 3})));
}

TEST(ThreePartition, IffShape) {
  auto [s, u] = three_partition_iff_instance(tp(1, 3, {1, 1, 1}), GuardMode::Plain);
  EXPECT_EQ(s.num_vars(), 3u);
  EXPECT_EQ(s.size(), 3u);  // pairs j < l within one block of three
  EXPECT_TRUE(u.empty());   // singleton slices carry no pairs
  auto [sf, uf] = three_partition_iff_instance(tp(1, 3, {1, 1, 1}), GuardMode::FT);
  EXPECT_EQ(sf.var_name(0), "f");
  EXPECT_EQ(sf.var_name(1), "t");
  EXPECT_THROW(three_partition_iff_instance(tp(1, 3, {1, 1, 1}), GuardMode::NandF), InvalidInstance);
}

TEST(ThreePartition, IffExamples) {
  EXPECT_TRUE(decide(three_partition_iff_instance(tp(1, 12, {4, 4, 4}), GuardMode::Plain)));
  EXPECT_TRUE(decide(three_partition_iff_instance(tp(2, 12, {4, 4, 4, 4, 4, 4}), GuardMode::Plain)));
  EXPECT_FALSE(decide(three_partition_iff_instance(tp(2, 12, {5, 5, 5, 3, 3, 3}), GuardMode::Plain)));
}

TEST(ThreePartition, XorExamples) {
  EXPECT_TRUE(decide(three_partition_xor_instance(tp(1, 12, {4, 4, 4}), GuardMode::Plain)));
  EXPECT_TRUE(decide(three_partition_xor_instance(tp(2, 12, {4, 4, 4, 4, 4, 4}), GuardMode::FT)));
  EXPECT_FALSE(decide(three_partition_xor_instance(tp(2, 12, {5, 5, 5, 3, 3, 3}), GuardMode::Plain)));
  EXPECT_THROW(three_partition_xor_instance(tp(1, 3, {1, 1, 1}), GuardMode::T), InvalidInstance);
}

TEST(ThreePartition, SmallInstancesMatchBruteForce) {
  const std::vector<ThreePartitionInstance> cases = {
      tp(2, 4, {1, 1, 2, 1, 1, 2}), tp(2, 4, {2, 2, 1, 1, 1, 1}), tp(2, 5, {3, 3, 1, 1, 1, 1}),
      tp(2, 5, {1, 1, 1, 1, 1, 5}), tp(2, 6, {4, 4, 1, 1, 1, 1}), tp(2, 6, {3, 3, 3, 1, 1, 1}),
      tp(1, 6, {1, 2, 3}),          tp(2, 3, {1, 1, 1, 1, 1, 1})};
  for (const auto& inst : cases) {
    const bool truth = three_partition_bruteforce(inst);
    for (GuardMode mode : {GuardMode::Plain, GuardMode::T, GuardMode::F, GuardMode::FT})
      EXPECT_EQ(decide(three_partition_iff_instance(inst, mode)), truth) << to_string(mode);
    if (inst.m * inst.bound <= 6)
      for (GuardMode mode : {GuardMode::Plain, GuardMode::FT})
        EXPECT_EQ(decide(three_partition_xor_instance(inst, mode)), truth) << to_string(mode);
  }
}

TEST(Implementation, Or2) {
  Implementation impl = find_implementation(*catalog::or2());
  const auto& targets = implementation_targets();
  ASSERT_EQ(impl.target, 0u);
  EXPECT_EQ(targets[0].description, "t & (x | y)");
  EXPECT_EQ(impl.set, SetBuilder({"t", "x", "y"})
                          .add(catalog::or2(), {"t", "t"})
                          .add(catalog::or2(), {"x", "y"})
                          .build());
}

TEST(Implementation, Xor2IsItsOwnImplementation) {
  Implementation impl = find_implementation(*catalog::xor2());
  EXPECT_EQ(implementation_targets()[impl.target].description, "x ^ y");
  EXPECT_EQ(impl.set, SetBuilder({"x", "y"}).add(catalog::xor2(), {"x", "y"}).build());
}

TEST(Implementation, LiteralConjunctionRejected) {
  EXPECT_THROW(find_implementation(*catalog::and2()), NotApplicable);
  EXPECT_THROW(find_implementation(*catalog::pos1()), NotApplicable);
}

TEST(Implementation, TinyBoundExhausts) {
  EXPECT_THROW(find_implementation(*catalog::one_in_three(), {1, 4}), BoundExhausted);
}

TEST(Implementation, ExistsForEveryNonLiteralFunctionUpToArityThree) {
  const auto& targets = implementation_targets();
  ASSERT_EQ(targets.size(), 10u);
  int checked = 0;
  for (unsigned k = 1; k <= 3; ++k) {
    for (const Constraint& c : testing::all_functions(k)) {
      if (testing::literal_conjunction_by_units(c)) continue;
      Implementation impl = find_implementation(c);
      ASSERT_LT(impl.target, targets.size());
      for (const Application& app : impl.set.apps()) {
        EXPECT_TRUE(app.constraint->same_function(c));
        for (const Argument& a : app.args) EXPECT_TRUE(a.is_variable());
      }
      EXPECT_TRUE(equivalent(impl.set, targets[impl.target].set)) << c.bits();
      ++checked;
    }
  }
  // 256 + 16 + 4 functions minus the 27 + 9 + 3 subcubes and the three empty tables.
  EXPECT_EQ(checked, 276 - 39 - 3);
}

ApplicationSet single_o(bool yes) {
  if (yes) return SetBuilder({"a"}).add(catalog::imp2(), {"a", "a"}).build();
  return SetBuilder({"a", "b"}).add(catalog::imp2(), {"a", "b"}).build();
}

Graph e_graph(bool yes) { return yes ? Graph(2, {{0, 1}}) : Graph::star(3); }

TEST(Wagner, SingleComponent) {
  WagnerInstance yes = wagner_compose({{single_o(true), e_graph(true)}});
  EXPECT_EQ(yes.n, 4u);
  EXPECT_EQ(yes.left.num_vars(), 8u);
  EXPECT_EQ(yes.right.num_vars(), 8u);
  EXPECT_TRUE(iso_implies(yes.left, yes.right).answer);
  WagnerInstance no = wagner_compose({{single_o(true), e_graph(false)}});
  EXPECT_EQ(no.n, 6u);
  EXPECT_FALSE(iso_implies(no.left, no.right).answer);
}

TEST(Wagner, ComponentOracles) {
  for (bool o : {false, true}) {
    EXPECT_EQ(decide(wagner_o_instance({single_o(o), e_graph(true)}, 1, 4)), o);
    EXPECT_EQ(hamiltonian_path_bruteforce(e_graph(o)), o);
  }
}

TEST(Wagner, TwoComponentsSecondWitnesses) {
  WagnerInstance w = wagner_compose({{single_o(false), e_graph(true)}, {single_o(true), e_graph(true)}});
  EXPECT_EQ(w.o_vars, (std::vector<std::size_t>{2, 1}));
  EXPECT_EQ(w.e_vars, (std::vector<std::size_t>{2, 2}));
  EXPECT_TRUE(iso_implies(w.left, w.right).answer);
}

TEST(Wagner, Rejections) {
  EXPECT_THROW(wagner_compose({}), InvalidInstance);
  EXPECT_THROW(wagner_compose({{single_o(true), Graph(3, {{0, 1}})}}), InvalidGraph);
}

}  // namespace
}  // namespace isoimp
