#pragma once

#include <compare>
#include <cstdint>
#include <memory>
#include <string>
#include <string_view>
#include <vector>

namespace isoimp {

using VarId = std::uint32_t;

/// A k-ary Boolean function stored as its 2^k-entry truth table.
///
/// Entry i is C(s) where s is i written in binary with argument 1 as the most
/// significant bit, so for OR2 the table reads 0111.
class Constraint {
 public:
  Constraint(std::string name, unsigned arity, std::vector<bool> table);

  /// Builds from a bit string such as "0111"; throws TableLengthError on a length mismatch.
  static Constraint from_bits(std::string name, unsigned arity, std::string_view bits);

  const std::string& name() const noexcept { return name_; }
  unsigned arity() const noexcept { return arity_; }
  std::size_t table_size() const noexcept { return table_.size(); }
  bool at(std::uint64_t index) const { return table_[index]; }
  const std::vector<bool>& table() const noexcept { return table_; }

  std::string bits() const;

  /// Indices of satisfying argument tuples, ascending.
  std::vector<std::uint64_t> satisfying() const;

  bool same_function(const Constraint& other) const noexcept {
    return arity_ == other.arity_ && table_ == other.table_;
  }

  friend bool operator==(const Constraint&, const Constraint&) = default;

 private:
  std::string name_;
  unsigned arity_;
  std::vector<bool> table_;
};

using ConstraintPtr = std::shared_ptr<const Constraint>;

inline ConstraintPtr make_constraint(std::string name, unsigned arity, std::string_view bits) {
  return std::make_shared<const Constraint>(Constraint::from_bits(std::move(name), arity, bits));
}

/// C^c with C^c(s) = C(complement of s). The name toggles a trailing "^c".
Constraint complement_constraint(const Constraint& c);

/// A constraint argument: a variable of the enclosing universe or one of the constants 0/1.
class Argument {
 public:
  enum class Kind : std::uint8_t { Zero, One, Variable };

  static constexpr Argument var(VarId id) noexcept { return Argument{Kind::Variable, id}; }
  static constexpr Argument zero() noexcept { return Argument{Kind::Zero, 0}; }
  static constexpr Argument one() noexcept { return Argument{Kind::One, 0}; }
  static constexpr Argument constant(bool value) noexcept { return value ? one() : zero(); }

  constexpr Kind kind() const noexcept { return kind_; }
  constexpr bool is_variable() const noexcept { return kind_ == Kind::Variable; }
  constexpr VarId id() const noexcept { return id_; }
  constexpr bool constant_value() const noexcept { return kind_ == Kind::One; }

  friend constexpr auto operator<=>(const Argument&, const Argument&) = default;

 private:
  constexpr Argument(Kind kind, VarId id) noexcept : kind_(kind), id_(id) {}

  Kind kind_;
  VarId id_;
};

/// C(z_1, ..., z_k). Identity is syntactic: constraint name plus argument tuple.
struct Application {
  ConstraintPtr constraint;
  std::vector<Argument> args;

  const std::string& name() const { return constraint->name(); }

  /// Evaluates against a bit lookup `value(var) -> bool`.
  template <typename Lookup>
  bool evaluate(Lookup&& value) const {
    std::uint64_t index = 0;
    for (const Argument& a : args) {
      index <<= 1;
      bool bit = a.is_variable() ? static_cast<bool>(value(a.id())) : a.constant_value();
      index |= bit ? 1u : 0u;
    }
    return constraint->at(index);
  }

  friend bool operator==(const Application& a, const Application& b) {
    return a.constraint->name() == b.constraint->name() && a.args == b.args;
  }
  friend std::strong_ordering operator<=>(const Application& a, const Application& b) {
    if (auto c = a.constraint->name() <=> b.constraint->name(); c != 0) return c;
    return a.args <=> b.args;
  }
};

}  // namespace isoimp
