#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace isoimp {

class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// A variable, permutation, or assignment does not belong to the universe it is used with.
class DomainError : public Error {
 public:
  using Error::Error;
};

/// An exhaustive enumeration or search exceeded its configured limit. Never a "no" answer.
class BudgetExceeded : public Error {
 public:
  using Error::Error;
};

class ParseError : public Error {
 public:
  enum class Kind { Syntax, TableLength, ArityMismatch, UnknownConstraint, UnknownVariable, DuplicateName };

  ParseError(Kind kind, std::size_t line, std::size_t column, const std::string& message)
      : Error(format(line, column, message)), kind_(kind), line_(line), column_(column) {}

  Kind kind() const noexcept { return kind_; }
  std::size_t line() const noexcept { return line_; }
  std::size_t column() const noexcept { return column_; }

 private:
  static std::string format(std::size_t line, std::size_t column, const std::string& message) {
    if (line == 0) return message;
    return std::to_string(line) + ":" + std::to_string(column) + ": " + message;
  }

  Kind kind_;
  std::size_t line_;
  std::size_t column_;
};

/// Truth table length differs from 2^arity. Line/column are zero when raised outside the parser.
class TableLengthError : public ParseError {
 public:
  TableLengthError(std::size_t line, std::size_t column, const std::string& message)
      : ParseError(Kind::TableLength, line, column, message) {}
};

class InvalidGraph : public Error {
 public:
  using Error::Error;
};

class InvalidInstance : public Error {
 public:
  using Error::Error;
};

class NotLiteralConjunction : public Error {
 public:
  using Error::Error;
};

class NotApplicable : public Error {
 public:
  using Error::Error;
};

/// The implementation search ran out of its size bound; existence is not refuted.
class BoundExhausted : public Error {
 public:
  using Error::Error;
};

}  // namespace isoimp
