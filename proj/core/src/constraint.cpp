#include "isoimp/constraint.hpp"

#include "isoimp/error.hpp"

namespace isoimp {

namespace {

constexpr unsigned kMaxArity = 24;

}  // namespace

Constraint::Constraint(std::string name, unsigned arity, std::vector<bool> table)
    : name_(std::move(name)), arity_(arity), table_(std::move(table)) {
  if (name_.empty()) throw Error("constraint name must not be empty");
  if (arity_ == 0) throw Error("constraint " + name_ + ": arity must be at least 1");
  if (arity_ > kMaxArity) throw Error("constraint " + name_ + ": arity too large");
  if (table_.size() != (std::size_t{1} << arity_)) {
    throw TableLengthError(0, 0,
                           "constraint " + name_ + ": table has " + std::to_string(table_.size()) +
                               " entries, arity " + std::to_string(arity_) + " needs " +
                               std::to_string(std::size_t{1} << arity_));
  }
}

Constraint Constraint::from_bits(std::string name, unsigned arity, std::string_view bits) {
  std::vector<bool> table;
  table.reserve(bits.size());
  for (char c : bits) {
    if (c != '0' && c != '1') throw Error("constraint " + name + ": table must consist of 0/1");
    table.push_back(c == '1');
  }
  return Constraint(std::move(name), arity, std::move(table));
}

std::string Constraint::bits() const {
  std::string out;
  out.reserve(table_.size());
  for (bool b : table_) out.push_back(b ? '1' : '0');
  return out;
}

std::vector<std::uint64_t> Constraint::satisfying() const {
  std::vector<std::uint64_t> out;
  for (std::uint64_t i = 0; i < table_.size(); ++i)
    if (table_[i]) out.push_back(i);
  return out;
}

Constraint complement_constraint(const Constraint& c) {
  const std::uint64_t mask = (std::uint64_t{1} << c.arity()) - 1;
  std::vector<bool> table(c.table_size());
  for (std::uint64_t i = 0; i < table.size(); ++i) table[i] = c.at(~i & mask);

  std::string name = c.name();
  if (name.size() > 2 && name.ends_with("^c"))
    name.resize(name.size() - 2);
  else
    name += "^c";
  return Constraint(std::move(name), c.arity(), std::move(table));
}

}  // namespace isoimp
