#include <gtest/gtest.h>

#include <random>

#include "isoimp/catalog.hpp"
#include "isoimp/error.hpp"
#include "isoimp/semantics.hpp"
#include "oracles.hpp"

namespace isoimp {
namespace {

ApplicationSet one(const ConstraintPtr& c, std::vector<std::string> args, std::vector<std::string> universe) {
  return SetBuilder(std::move(universe)).add(c, args).build();
}

TEST(Implies, Examples) {
  EXPECT_TRUE(implies(one(catalog::or2(), {"x", "x"}, {"x"}), one(catalog::or2(), {"x", "y"}, {"x", "y"})));
  EXPECT_FALSE(implies(one(catalog::or2(), {"x", "y"}, {"x", "y"}), one(catalog::or2(), {"x", "x"}, {"x"})));
  EXPECT_TRUE(implies(one(catalog::xor2(), {"x", "y"}, {"x", "y"}), ApplicationSet({"z"}, {})));
}

TEST(Implies, ExtraVariablesAreFree) {
  // x ⇒ x ∨ y even though y is missing from the left universe; x does not imply y.
  EXPECT_TRUE(implies(one(catalog::pos1(), {"x"}, {"x"}), one(catalog::or2(), {"x", "y"}, {"x", "y"})));
  EXPECT_FALSE(implies(one(catalog::pos1(), {"x"}, {"x"}), one(catalog::pos1(), {"y"}, {"y"})));
}

TEST(Equivalent, Examples) {
  EXPECT_TRUE(equivalent(one(catalog::or2(), {"x", "y"}, {"x", "y"}), one(catalog::or2(), {"y", "x"}, {"x", "y"})));
  ApplicationSet guarded = SetBuilder({"t", "x", "y"})
                               .add(catalog::or2(), {"x", "y"})
                               .add(catalog::or2(), {"t", "t"})
                               .build();
  EXPECT_TRUE(equivalent(guarded, one(catalog::t_or(), {"t", "x", "y"}, {"t", "x", "y"})));
  EXPECT_FALSE(equivalent(one(catalog::or2(), {"x", "y"}, {"x", "y"}), one(catalog::xor2(), {"x", "y"}, {"x", "y"})));
}

TEST(ConstantStatus, Examples) {
  EXPECT_EQ(constant_status(one(catalog::imp2(), {"x", "x"}, {"x"})), ConstantStatus::One);
  EXPECT_EQ(constant_status(one(catalog::xor2(), {"x", "x"}, {"x"})), ConstantStatus::Zero);
  EXPECT_EQ(constant_status(one(catalog::or2(), {"x", "y"}, {"x", "y"})), ConstantStatus::Neither);
  EXPECT_EQ(constant_status(ApplicationSet({}, {})), ConstantStatus::One);
  EXPECT_EQ(to_string(ConstantStatus::Neither), "Neither");
}

TEST(Implies, LimitRaises) {
  Limits tight;
  tight.max_enumeration_vars = 2;
  EXPECT_THROW(implies(one(catalog::pos1(), {"x"}, {"x", "y", "z"}), ApplicationSet({}, {}), tight),
               BudgetExceeded);
}

class SemanticCorpus : public ::testing::Test {
 protected:
  std::mt19937_64 rng{77};
  std::vector<ConstraintPtr> pool = catalog::all();
  std::vector<std::string> names{"a", "b", "c", "d"};

  ApplicationSet draw(double p_const = 0.1) { return testing::random_set(rng, pool, names, 3, p_const); }
};

TEST_F(SemanticCorpus, ReflexiveAndTransitive) {
  for (int i = 0; i < 300; ++i) {
    ApplicationSet a = draw(), b = draw(), c = draw();
    EXPECT_TRUE(implies(a, a));
    if (implies(a, b) && implies(b, c)) EXPECT_TRUE(implies(a, c));
  }
}

TEST_F(SemanticCorpus, ImplicationBoundsCounts) {
  for (int i = 0; i < 300; ++i) {
    ApplicationSet a = draw(), b = draw();
    if (implies(a, b)) EXPECT_LE(count_sat(a), count_sat(b));
  }
}

TEST_F(SemanticCorpus, ComplementDuality) {
  for (int i = 0; i < 300; ++i) {
    ApplicationSet a = draw(0.0), b = draw(0.0);
    EXPECT_EQ(implies(a, b), implies(complement_set(a), complement_set(b)));
    ApplicationSet ac = draw(), bc = draw();
    EXPECT_EQ(implies(ac, bc), implies(testing::dual_set(ac), testing::dual_set(bc)));
  }
}

TEST_F(SemanticCorpus, ConstantStatusMatchesCount) {
  for (int i = 0; i < 300; ++i) {
    ApplicationSet a = draw();
    const auto count = count_sat(a);
    const auto status = constant_status(a);
    EXPECT_EQ(status == ConstantStatus::Zero, count == 0);
    EXPECT_EQ(status == ConstantStatus::One, count == (std::uint64_t{1} << a.num_vars()));
  }
}

}  // namespace
}  // namespace isoimp
