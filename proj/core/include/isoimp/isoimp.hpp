#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "isoimp/application_set.hpp"
#include "isoimp/limits.hpp"

namespace isoimp {

/// Search limits. Crossing either raises BudgetExceeded; a budget never produces an answer.
struct SearchBudget {
  std::uint64_t max_nodes = 200'000'000;
  std::uint64_t max_ms = 60'000;
};

/// Individually switchable search prunes. Every combination decides the same answer
/// and returns the same witness.
struct PruneOptions {
  bool count = true;      // |sat(S)| > |sat(U)| rules out implication
  bool signature = true;  // unary/binary projection compatibility with forward checking
  bool normalize = true;  // disjoint supports: U-support targets only receive S-support sources
  bool symmetry = true;   // interchangeable variables are assigned in increasing order
};

enum class Engine { Auto, Oracle, Fast, Search };

struct SearchOptions {
  Engine engine = Engine::Auto;
  SearchBudget budget;
  PruneOptions prunes;
  Limits limits;
};

struct SearchStats {
  std::string engine;
  std::uint64_t nodes = 0;
  std::uint64_t prune_count = 0;
  std::uint64_t prune_signature = 0;
  std::uint64_t prune_matching = 0;
  std::uint64_t prune_application = 0;
  std::uint64_t prune_symmetry = 0;
  std::uint64_t prune_normalize = 0;
  std::uint64_t elapsed_ms = 0;
};

/// Outcome of a decision. The witness is a permutation of `universe` (the union of
/// both operands' universes, left first) and is present exactly when the answer is yes.
struct Decision {
  bool answer = false;
  std::optional<Permutation> witness;
  std::vector<std::string> universe;
  SearchStats stats;
};

/// Does some permutation π of the joint universe make π(S) imply U?
///
/// A yes carries the lexicographically least witness (image lists compared in
/// universe order), independent of engine and prune settings. Constants in
/// argument positions stay fixed. With Engine::Auto, languages whose every
/// constraint is a literal conjunction take the counting fast path.
Decision iso_implies(const ApplicationSet& s, const ApplicationSet& u, const SearchOptions& options = {});

/// Is some π(S) equivalent to U? Searched directly, not assembled from two one-sided witnesses.
Decision isomorphic(const ApplicationSet& s, const ApplicationSet& u, const SearchOptions& options = {});

/// Reference answer by scanning all |X|! permutations; X is limited by Limits::max_oracle_vars.
bool iso_implies_oracle(const ApplicationSet& s, const ApplicationSet& u, const Limits& limits = {});

/// The first witness met by the oracle's lexicographic scan, or nothing.
std::optional<Permutation> oracle_witness(const ApplicationSet& s, const ApplicationSet& u,
                                          const Limits& limits = {});

/// Same scan for isomorphism.
bool isomorphic_oracle(const ApplicationSet& s, const ApplicationSet& u, const Limits& limits = {});

/// Semantic reading of a set built only from literal-conjunction constraints.
struct LiteralForm {
  bool contradictory = false;                   // equivalent to 0
  std::vector<std::pair<VarId, bool>> literals;  // distinct (variable, polarity), sorted
  std::size_t positive() const;
  std::size_t negative() const;
  bool tautology() const { return !contradictory && literals.empty(); }
};

/// Throws NotLiteralConjunction if some constraint is not a constant or a conjunction of literals.
LiteralForm literal_form(const ApplicationSet& s);

/// Polynomial decision for literal-conjunction languages: constant cases first,
/// then a comparison of positive and negative literal counts.
bool iso_implies_literal(const ApplicationSet& s, const ApplicationSet& u);

/// As iso_implies_literal, with the lexicographically least witness built greedily.
Decision iso_implies_fast(const ApplicationSet& s, const ApplicationSet& u);

/// True when every constraint used by either set is a literal conjunction.
bool literal_language(const ApplicationSet& s, const ApplicationSet& u);

}  // namespace isoimp
