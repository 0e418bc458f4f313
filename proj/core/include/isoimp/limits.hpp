#pragma once

namespace isoimp {

// Desk-scale bounds for the exhaustive procedures. All of them raise BudgetExceeded when crossed.
struct Limits {
  unsigned max_enumeration_vars = 20;  // 2^n assignment scans
  unsigned max_oracle_vars = 8;        // n! permutation scans
  unsigned max_classifier_arity = 16;  // truth-table closure scans
};

}  // namespace isoimp
