#pragma once

#include <cstddef>
#include <optional>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "isoimp/application_set.hpp"
#include "isoimp/graph.hpp"

// Instance generators for the hardness reductions, each with a combinatorial oracle.
//
// Naming: graph vertex v (0-based) becomes x_1_<v+1> on the left and x_<v+1> on the
// right; partition pools use x_<block>_<j> and y_<block>_<j>; guards are t and f and
// come first in every universe (f before t).
namespace isoimp {

enum class GuardMode { Plain, T, F, FT, NandF, NandFT };

std::string_view to_string(GuardMode mode);
std::optional<GuardMode> parse_guard_mode(std::string_view text);

/// Modes accepted by each family.
bool valid_or_mode(GuardMode mode);   // Plain, T, FT, NandF, NandFT
bool valid_iff_mode(GuardMode mode);  // Plain, T, F, FT
bool valid_xor_mode(GuardMode mode);  // Plain, FT

using InstancePair = std::pair<ApplicationSet, ApplicationSet>;

/// One OR-family application per edge: x∨y, t∧(x∨y), ¬f∧t∧(x∨y), ¬f∧(¬x∨¬y) or ¬f∧t∧(¬x∨¬y).
/// Vertex v is named prefix + (v+1). Throws InvalidGraph on isolated vertices and
/// InvalidInstance on a mode outside the family.
ApplicationSet graph_to_or_set(const Graph& g, GuardMode mode, std::string_view prefix = "x_");

/// (G translated with prefix x_1_, H with prefix x_): disjoint vertex names, shared guards.
InstancePair subgraph_instance(const Graph& g, const Graph& h, GuardMode mode);

/// Does G contain a (not necessarily induced) subgraph isomorphic to H? |V(G)| ≤ 8.
bool subgraph_bruteforce(const Graph& g, const Graph& h);

/// Left: G's edges over y_1_<v>; right: the chain y_1 ∨ y_2, ..., y_{n-1} ∨ y_n.
/// Needs a connected graph on at least two vertices.
InstancePair hampath_instance(const Graph& g);

/// Path enumeration; |V(G)| ≤ 10.
bool hamiltonian_path_bruteforce(const Graph& g);

struct ThreePartitionInstance {
  unsigned m = 1;
  unsigned bound = 1;               // B
  std::vector<unsigned> sizes;      // 3m positive integers summing to m·B
  bool strict = false;              // also require B/4 < s < B/2

  /// Throws InvalidInstance when the invariants fail.
  void validate() const;
};

/// S: all within-block equivalences over the pool x_<i>_<1..B>; U: the same for the
/// consecutive size-s(a) slices of the pool. Guards per mode (Plain, T, F, FT).
InstancePair three_partition_iff_instance(const ThreePartitionInstance& inst, GuardMode mode);

/// S: x ⊕ y across paired pools X_i, Y_i; U: the same across consecutive slices of
/// both pools. Modes Plain and FT.
InstancePair three_partition_xor_instance(const ThreePartitionInstance& inst, GuardMode mode);

/// Can the sizes be split into m groups of sum B each? Groups may have any cardinality. 3m ≤ 12.
bool three_partition_bruteforce(const ThreePartitionInstance& inst);

struct ImplementationBounds {
  unsigned max_apps = 4;
  unsigned max_vars = 4;
};

struct Implementation {
  std::size_t target = 0;   // index into implementation_targets()
  ApplicationSet set;       // applications of C over the target's variables
};

struct ImplementationTarget {
  std::string description;  // e.g. "t & (x | y)"
  ApplicationSet set;       // one guarded catalog application over f, t, x, y as needed
};

/// The ten targets in their fixed search order.
const std::vector<ImplementationTarget>& implementation_targets();

/// First set of at most max_apps applications of C, over the target's variables and
/// without constants, equivalent to one of the targets. Targets are tried in order,
/// then set size, then argument tuples lexicographically (variables ordered f, t, x, y).
/// NotApplicable if C is a literal conjunction; BoundExhausted if nothing fits the bounds.
Implementation find_implementation(const Constraint& c, const ImplementationBounds& bounds = {});

/// An implication-only set O over x_<1..n_i> (any variable names; the universe order
/// gives the numbering) and an isolated-vertex-free graph E.
struct WagnerComponent {
  ApplicationSet o_side;
  Graph e_side;
};

struct WagnerInstance {
  ApplicationSet left;   // S
  ApplicationSet right;  // U
  std::size_t n = 0;     // padded block width
  std::vector<std::size_t> o_vars;  // n_i
  std::vector<std::size_t> e_vars;  // n'_i
};

/// Pads each component to width n = max(n_i, n'_i + 2) and composes S and U so that
/// S ⇒̃ U iff some i has both Ô_i ⇒̃ (all x_i_j → x_i_l) and a Hamiltonian path in E_i.
WagnerInstance wagner_compose(const std::vector<WagnerComponent>& components);

/// Ô_i alone and its all-pairs implication target, over x_<i>_<1..n>.
InstancePair wagner_o_instance(const WagnerComponent& component, std::size_t index, std::size_t n);

}  // namespace isoimp
