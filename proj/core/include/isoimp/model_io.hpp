#pragma once

#include <map>
#include <string>
#include <string_view>

#include "isoimp/application_set.hpp"
#include "isoimp/constraint.hpp"

namespace isoimp {

/// Contents of one text model: a constraint catalog and named application sets.
///
///     # comment
///     constraint OR2 arity=2 table=0111
///     set S over x,y,z { OR2(x,y) OR2(y,z) }
///
/// Table bits are listed index 0 first with argument 1 as the most significant
/// index bit. Arguments are variable names from the `over` list or the literals
/// 0 and 1.
struct Model {
  std::map<std::string, ConstraintPtr> catalog;
  std::map<std::string, ApplicationSet> sets;

  const ApplicationSet& set(const std::string& name) const;
  ConstraintPtr constraint(const std::string& name) const;

  /// Adds every constraint used by s (by name) and stores s under `name`.
  void add_set(const std::string& name, const ApplicationSet& s);
  void add_constraint(const ConstraintPtr& c);

  friend bool operator==(const Model& a, const Model& b);
};

Model parse_model(std::string_view text);

/// Canonical text: constraints then sets, each sorted by name; one set per line.
std::string serialize_model(const Model& model);

}  // namespace isoimp
