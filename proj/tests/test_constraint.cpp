#include <gtest/gtest.h>

#include "isoimp/catalog.hpp"
#include "isoimp/constraint.hpp"
#include "isoimp/error.hpp"
#include "oracles.hpp"

namespace isoimp {
namespace {

TEST(Constraint, TableConventionArgumentOneIsMostSignificant) {
  // x → y is false only at x=1, y=0, i.e. index 0b10.
  const Constraint& imp = *catalog::imp2();
  EXPECT_EQ(imp.bits(), "1101");
  EXPECT_FALSE(imp.at(0b10));
  EXPECT_TRUE(imp.at(0b01));
}

TEST(Constraint, FromBitsValidation) {
  EXPECT_THROW(Constraint::from_bits("X", 2, "01"), TableLengthError);
  EXPECT_THROW(Constraint::from_bits("X", 1, "0a"), Error);
  EXPECT_THROW(Constraint::from_bits("X", 0, "1"), Error);
  EXPECT_THROW(Constraint::from_bits("", 1, "01"), Error);
  Constraint c = Constraint::from_bits("OR2", 2, "0111");
  EXPECT_EQ(c.arity(), 2u);
  EXPECT_EQ(c.satisfying(), (std::vector<std::uint64_t>{1, 2, 3}));
}

TEST(Constraint, ComplementExamples) {
  EXPECT_EQ(complement_constraint(*catalog::or2()).bits(), "1110");
  EXPECT_EQ(complement_constraint(*catalog::xor2()).bits(), "0110");
  EXPECT_EQ(complement_constraint(*catalog::true1()).bits(), "11");
  EXPECT_EQ(complement_constraint(*catalog::or2()).name(), "OR2^c");
  EXPECT_EQ(complement_constraint(complement_constraint(*catalog::or2())).name(), "OR2");
}

TEST(Constraint, ComplementIsAnInvolution) {
  for (unsigned k = 1; k <= 4; ++k)
    for (const Constraint& c : testing::all_functions(k)) {
      Constraint cc = complement_constraint(c);
      EXPECT_EQ(complement_constraint(cc), c);
      for (std::uint64_t i = 0; i < c.table_size(); ++i)
        ASSERT_EQ(cc.at(i), c.at(c.table_size() - 1 - i));
    }
}

TEST(Constraint, CatalogIsSortedAndDistinct) {
  auto all = catalog::all();
  ASSERT_GE(all.size(), 10u);
  for (std::size_t i = 1; i < all.size(); ++i) EXPECT_LT(all[i - 1]->name(), all[i]->name());
}

TEST(Constraint, GuardedTables) {
  // ¬f ∧ t ∧ (x ∨ y) over (f, t, x, y).
  const Constraint& c = *catalog::ft_or();
  for (std::uint64_t i = 0; i < 16; ++i) {
    bool f = i & 8, t = i & 4, x = i & 2, y = i & 1;
    EXPECT_EQ(c.at(i), !f && t && (x || y)) << i;
  }
  const Constraint& one = *catalog::one_in_three();
  for (std::uint64_t i = 0; i < 8; ++i) EXPECT_EQ(one.at(i), std::popcount(i) == 1) << i;
}

TEST(Argument, Kinds) {
  EXPECT_TRUE(Argument::var(3).is_variable());
  EXPECT_EQ(Argument::var(3).id(), 3u);
  EXPECT_FALSE(Argument::constant(false).constant_value());
  EXPECT_TRUE(Argument::constant(true).constant_value());
  EXPECT_NE(Argument::zero(), Argument::one());
}

}  // namespace
}  // namespace isoimp
