#include "isoimp/semantics.hpp"

#include "isoimp/error.hpp"

namespace isoimp {

std::string_view to_string(ConstantStatus status) {
  switch (status) {
    case ConstantStatus::Zero: return "Zero";
    case ConstantStatus::One: return "One";
    case ConstantStatus::Neither: return "Neither";
  }
  return "?";
}

namespace {

void check_limit(std::size_t n, const Limits& limits) {
  if (n > limits.max_enumeration_vars)
    throw BudgetExceeded("joint universe of " + std::to_string(n) +
                         " variables exceeds the enumeration limit of " +
                         std::to_string(limits.max_enumeration_vars));
}

}  // namespace

bool implies(const ApplicationSet& s, const ApplicationSet& u, const Limits& limits) {
  auto [left, right] = over_union(s, u);
  const std::size_t n = left.num_vars();
  check_limit(n, limits);
  const std::uint64_t total = std::uint64_t{1} << n;
  for (std::uint64_t rank = 0; rank < total; ++rank) {
    Assignment a = Assignment::from_rank(n, rank);
    if (eval_set(left, a) && !eval_set(right, a)) return false;
  }
  return true;
}

bool equivalent(const ApplicationSet& s, const ApplicationSet& u, const Limits& limits) {
  return implies(s, u, limits) && implies(u, s, limits);
}

ConstantStatus constant_status(const ApplicationSet& s, const Limits& limits) {
  check_limit(s.num_vars(), limits);
  const std::uint64_t total = std::uint64_t{1} << s.num_vars();
  const std::uint64_t count = count_sat(s, limits);
  if (count == 0) return ConstantStatus::Zero;
  if (count == total) return ConstantStatus::One;
  return ConstantStatus::Neither;
}

}  // namespace isoimp
