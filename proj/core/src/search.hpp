#pragma once

#include "isoimp/application_set.hpp"
#include "isoimp/isoimp.hpp"

namespace isoimp::detail {

enum class Relation { Implication, Equivalence };

/// Backtracking search for the lexicographically least π with π(S) ⇒ U
/// (or π(S) ≡ U). Requires a joint universe of at most 64 variables.
Decision search(const ApplicationSet& s, const ApplicationSet& u, Relation relation,
                const SearchOptions& options);

}  // namespace isoimp::detail
