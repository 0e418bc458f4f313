#pragma once

#include <string_view>

#include "isoimp/application_set.hpp"
#include "isoimp/limits.hpp"

namespace isoimp {

enum class ConstantStatus { Zero, One, Neither };

std::string_view to_string(ConstantStatus status);

// Exhaustive semantic relations. Both operands are read over the union of their
// universes; a variable missing from one side is unconstrained there.

/// Every assignment satisfying s also satisfies u.
bool implies(const ApplicationSet& s, const ApplicationSet& u, const Limits& limits = {});

bool equivalent(const ApplicationSet& s, const ApplicationSet& u, const Limits& limits = {});

ConstantStatus constant_status(const ApplicationSet& s, const Limits& limits = {});

}  // namespace isoimp
