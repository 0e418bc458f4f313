#pragma once

#include <vector>

#include "isoimp/constraint.hpp"

// Named constraints used by the generators, the CLI, and the tests.
// Guarded variants take their guard arguments first, in the order f, t, x, y.
namespace isoimp::catalog {

ConstraintPtr pos1();    // x
ConstraintPtr neg1();    // ¬x
ConstraintPtr true1();   // constant 1
ConstraintPtr false1();  // constant 0
ConstraintPtr and2();
ConstraintPtr or2();
ConstraintPtr nand2();   // ¬x ∨ ¬y
ConstraintPtr imp2();    // x → y
ConstraintPtr iff2();
ConstraintPtr xor2();
ConstraintPtr t_or();    // t ∧ (x ∨ y)
ConstraintPtr ft_or();   // ¬f ∧ t ∧ (x ∨ y)
ConstraintPtr f_nand();  // ¬f ∧ (¬x ∨ ¬y)
ConstraintPtr ft_nand(); // ¬f ∧ t ∧ (¬x ∨ ¬y)
ConstraintPtr t_iff();   // t ∧ (x ↔ y)
ConstraintPtr f_iff();   // ¬f ∧ (x ↔ y)
ConstraintPtr ft_iff();  // ¬f ∧ t ∧ (x ↔ y)
ConstraintPtr ft_xor();  // ¬f ∧ t ∧ (x ⊕ y)
ConstraintPtr one_in_three();
ConstraintPtr nae3();
ConstraintPtr maj3();

/// Every constraint above, ordered by name.
std::vector<ConstraintPtr> all();

}  // namespace isoimp::catalog
