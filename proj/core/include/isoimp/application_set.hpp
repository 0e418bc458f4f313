#pragma once

#include <initializer_list>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <unordered_map>
#include <utility>
#include <vector>

#include "isoimp/constraint.hpp"
#include "isoimp/limits.hpp"

namespace isoimp {

/// A finite set of applications over an explicit, ordered variable universe.
///
/// The universe may contain variables that occur in no application. Applications
/// are kept sorted and deduplicated, so two sets compare equal exactly when their
/// universes and syntactic application sets agree.
class ApplicationSet {
 public:
  ApplicationSet() = default;
  ApplicationSet(std::vector<std::string> universe, std::vector<Application> apps);

  const std::vector<std::string>& universe() const noexcept { return universe_; }
  std::size_t num_vars() const noexcept { return universe_.size(); }
  std::span<const Application> apps() const noexcept { return apps_; }
  std::size_t size() const noexcept { return apps_.size(); }
  bool empty() const noexcept { return apps_.empty(); }

  std::optional<VarId> find(std::string_view name) const;
  const std::string& var_name(VarId id) const { return universe_.at(id); }

  /// Variables occurring in some application, ascending by id.
  std::vector<VarId> occurring() const;

  /// Distinct constraints used, ordered by name.
  std::vector<ConstraintPtr> constraints() const;

  /// Re-expresses this set over a superset universe, matching variables by name.
  ApplicationSet over(const std::vector<std::string>& universe) const;

  friend bool operator==(const ApplicationSet&, const ApplicationSet&) = default;

 private:
  std::vector<std::string> universe_;
  std::vector<Application> apps_;
};

/// Union universe of two sets: the left universe followed by right-only names.
std::vector<std::string> union_universe(const ApplicationSet& left, const ApplicationSet& right);

/// Both sets re-expressed over union_universe(left, right).
std::pair<ApplicationSet, ApplicationSet> over_union(const ApplicationSet& left,
                                                     const ApplicationSet& right);

/// Incremental construction by variable name; "0" and "1" denote constants.
class SetBuilder {
 public:
  SetBuilder() = default;
  explicit SetBuilder(std::vector<std::string> universe);

  VarId declare(const std::string& name);
  SetBuilder& add(const ConstraintPtr& constraint, std::initializer_list<std::string_view> args);
  SetBuilder& add(const ConstraintPtr& constraint, const std::vector<std::string>& args);

  ApplicationSet build() const { return ApplicationSet(universe_, apps_); }

 private:
  std::vector<std::string> universe_;
  std::unordered_map<std::string, VarId> index_;
  std::vector<Application> apps_;
};

/// A total map from a universe of n variables to {0,1}.
class Assignment {
 public:
  Assignment() = default;
  explicit Assignment(std::vector<bool> values) : values_(std::move(values)) {}

  /// The rank-th assignment in lexicographic order: variable 0 is the most significant bit.
  static Assignment from_rank(std::size_t num_vars, std::uint64_t rank);

  std::size_t size() const noexcept { return values_.size(); }
  bool operator[](VarId v) const { return values_[v]; }
  bool at(VarId v) const;
  Assignment flipped() const;
  std::string bits() const;

  friend bool operator==(const Assignment&, const Assignment&) = default;

 private:
  std::vector<bool> values_;
};

/// A bijection on a universe, stored as the image list π(0), π(1), ...
class Permutation {
 public:
  Permutation() = default;
  explicit Permutation(std::vector<VarId> images);

  static Permutation identity(std::size_t n);
  static Permutation transposition(std::size_t n, VarId a, VarId b);

  std::size_t size() const noexcept { return images_.size(); }
  VarId operator()(VarId v) const { return images_.at(v); }
  const std::vector<VarId>& images() const noexcept { return images_; }
  Permutation inverse() const;

  friend bool operator==(const Permutation&, const Permutation&) = default;
  friend auto operator<=>(const Permutation&, const Permutation&) = default;

 private:
  std::vector<VarId> images_;
};

/// (outer ∘ inner)(v) = outer(inner(v)).
Permutation compose(const Permutation& outer, const Permutation& inner);

bool eval_application(const Application& app, const Assignment& a);
bool eval_set(const ApplicationSet& s, const Assignment& a);

/// All satisfying assignments of s over its universe, in lexicographic order.
std::vector<Assignment> sat_assignments(const ApplicationSet& s, const Limits& limits = {});

/// Number of satisfying assignments over s's universe.
std::uint64_t count_sat(const ApplicationSet& s, const Limits& limits = {});

/// Replaces every variable v by π(v); constants and universe are unchanged.
ApplicationSet apply_permutation(const Permutation& pi, const ApplicationSet& s);

/// Replaces each application's constraint by its complement, keeping the arguments.
ApplicationSet complement_set(const ApplicationSet& s);

std::string to_string(const Application& app, const ApplicationSet& context);

}  // namespace isoimp
