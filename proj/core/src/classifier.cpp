#include "isoimp/classifier.hpp"

#include <algorithm>
#include <bit>
#include <cstdint>

#include "isoimp/error.hpp"

namespace isoimp {

std::string_view to_string(ComplexityClass c) {
  switch (c) {
    case ComplexityClass::InP: return "InP";
    case ComplexityClass::NPComplete: return "NPComplete";
    case ComplexityClass::NPHardCoNPHardInPparNP: return "NPHardCoNPHardInPparNP";
  }
  return "?";
}

namespace {

using Tuple = std::uint32_t;

// Closure under coordinate-wise AND. For every m, g[m] is the AND of all members
// of T lying above m; T is closed iff each such meet is itself in T.
bool and_closed(const std::vector<bool>& member, unsigned arity) {
  const std::size_t size = std::size_t{1} << arity;
  const Tuple all = static_cast<Tuple>(size - 1);
  std::vector<Tuple> meet(size, all);
  std::vector<bool> above(size, false);
  for (Tuple m = 0; m < size; ++m)
    if (member[m]) {
      meet[m] = m;
      above[m] = true;
    }
  for (unsigned bit = 0; bit < arity; ++bit) {
    const Tuple b = Tuple{1} << bit;
    for (Tuple m = 0; m < size; ++m) {
      if (m & b) continue;
      if (above[m | b]) {
        meet[m] &= meet[m | b];
        above[m] = true;
      }
    }
  }
  for (Tuple m = 0; m < size; ++m)
    if (above[m] && !member[meet[m]]) return false;
  return true;
}

bool coset(const std::vector<Tuple>& sat) {
  if (sat.empty()) return true;
  std::vector<Tuple> basis;  // reduced row echelon by leading bit
  for (Tuple t : sat) {
    Tuple v = t ^ sat.front();
    for (Tuple b : basis) v = std::min(v, v ^ b);
    if (v) {
      basis.push_back(v);
      std::sort(basis.rbegin(), basis.rend());
    }
  }
  return sat.size() == (std::size_t{1} << basis.size());
}

bool determined_by_pairs(const std::vector<bool>& member, const std::vector<Tuple>& sat,
                         unsigned arity) {
  if (sat.empty()) return true;
  // pair[i][j] bit (2a+b) set when some member has x_i = a and x_j = b.
  std::vector<std::uint8_t> pair(arity * arity, 0);
  for (Tuple t : sat)
    for (unsigned i = 0; i < arity; ++i)
      for (unsigned j = 0; j < arity; ++j) {
        unsigned a = (t >> i) & 1u, b = (t >> j) & 1u;
        pair[i * arity + j] |= static_cast<std::uint8_t>(1u << (2 * a + b));
      }
  const std::size_t size = std::size_t{1} << arity;
  for (Tuple m = 0; m < size; ++m) {
    if (member[m]) continue;
    bool consistent = true;
    for (unsigned i = 0; i < arity && consistent; ++i)
      for (unsigned j = i; j < arity; ++j) {
        unsigned a = (m >> i) & 1u, b = (m >> j) & 1u;
        if (!(pair[i * arity + j] >> (2 * a + b) & 1u)) {
          consistent = false;
          break;
        }
      }
    if (consistent) return false;
  }
  return true;
}

}  // namespace

PropertyRecord constraint_properties(const Constraint& c, const Limits& limits) {
  const unsigned k = c.arity();
  if (k > limits.max_classifier_arity)
    throw BudgetExceeded("constraint " + c.name() + " has arity " + std::to_string(k) +
                         ", above the classifier limit of " +
                         std::to_string(limits.max_classifier_arity));
  const std::size_t size = std::size_t{1} << k;
  const Tuple all = static_cast<Tuple>(size - 1);

  std::vector<bool> member(size);
  std::vector<bool> flipped(size);
  std::vector<Tuple> sat;
  for (Tuple i = 0; i < size; ++i) {
    member[i] = c.at(i);
    flipped[~i & all] = member[i];
    if (member[i]) sat.push_back(i);
  }

  PropertyRecord r;
  r.zero_valid = member[0];
  r.one_valid = member[all];
  r.horn = and_closed(member, k);
  r.anti_horn = and_closed(flipped, k);
  r.affine = coset(sat);
  r.bijunctive = determined_by_pairs(member, sat, k);
  r.two_affine = r.affine && r.bijunctive;
  r.complementive = member == flipped;

  if (sat.empty()) {
    r.literal_conjunction = true;
  } else {
    Tuple ones = all, zeros = all;  // coordinates constantly 1 / constantly 0 over T
    for (Tuple t : sat) {
      ones &= t;
      zeros &= ~t;
    }
    const unsigned fixed = static_cast<unsigned>(std::popcount(ones) + std::popcount(zeros & all));
    r.literal_conjunction = sat.size() == (std::size_t{1} << (k - fixed));
  }
  return r;
}

SetProperties set_properties(const std::vector<ConstraintPtr>& language, const Limits& limits) {
  SetProperties out;
  out.flags = PropertyRecord{true, true, true, true, true, true, true, true, true};
  if (language.empty()) {
    out.warnings.push_back("empty constraint language: all properties hold vacuously");
    return out;
  }
  for (const ConstraintPtr& c : language) {
    PropertyRecord r = constraint_properties(*c, limits);
    PropertyRecord& f = out.flags;
    f.zero_valid = f.zero_valid && r.zero_valid;
    f.one_valid = f.one_valid && r.one_valid;
    f.horn = f.horn && r.horn;
    f.anti_horn = f.anti_horn && r.anti_horn;
    f.bijunctive = f.bijunctive && r.bijunctive;
    f.affine = f.affine && r.affine;
    f.two_affine = f.two_affine && r.two_affine;
    f.complementive = f.complementive && r.complementive;
    f.literal_conjunction = f.literal_conjunction && r.literal_conjunction;
  }
  return out;
}

ComplexityClass classify(const std::vector<ConstraintPtr>& language, const Limits& limits) {
  const PropertyRecord flags = set_properties(language, limits).flags;
  if (flags.literal_conjunction) return ComplexityClass::InP;
  if (flags.schaefer()) return ComplexityClass::NPComplete;
  return ComplexityClass::NPHardCoNPHardInPparNP;
}

}  // namespace isoimp
