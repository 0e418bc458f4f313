#pragma once

#include <string>
#include <string_view>
#include <vector>

#include "isoimp/constraint.hpp"
#include "isoimp/limits.hpp"

namespace isoimp {

/// Structural flags of a constraint (or, aggregated, of a constraint language).
struct PropertyRecord {
  bool zero_valid = false;
  bool one_valid = false;
  bool horn = false;
  bool anti_horn = false;
  bool bijunctive = false;
  bool affine = false;
  bool two_affine = false;
  bool complementive = false;
  bool literal_conjunction = false;  // equivalent to a constant or a conjunction of literals

  bool schaefer() const noexcept { return horn || anti_horn || bijunctive || affine; }

  friend bool operator==(const PropertyRecord&, const PropertyRecord&) = default;
};

struct SetProperties {
  PropertyRecord flags;
  std::vector<std::string> warnings;
};

/// The three branches of the isomorphic-implication trichotomy.
enum class ComplexityClass { InP, NPComplete, NPHardCoNPHardInPparNP };

std::string_view to_string(ComplexityClass c);

/// Flags decided on the satisfying-tuple set T by closure tests:
/// Horn = closed under AND, anti-Horn = closed under OR, bijunctive = closed under
/// majority (equivalently, determined by its binary projections), affine = a coset
/// of a linear subspace (closed under ternary XOR), literal conjunction = empty or
/// a subcube. An empty T counts as Horn, anti-Horn, bijunctive, affine, 2-affine,
/// complementive and literal conjunction.
PropertyRecord constraint_properties(const Constraint& c, const Limits& limits = {});

/// Member-wise conjunction. An empty language is vacuously everything, with a warning.
SetProperties set_properties(const std::vector<ConstraintPtr>& language, const Limits& limits = {});

ComplexityClass classify(const std::vector<ConstraintPtr>& language, const Limits& limits = {});

}  // namespace isoimp
