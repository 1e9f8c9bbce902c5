#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace graphclass {

/// Raised when an edge label does not name an edge of the graph.
class LabelError : public std::out_of_range {
 public:
  using std::out_of_range::out_of_range;
};

/// An operation was called outside its documented precondition
/// (contracting a loop, asking for Z on a bridge, ...).
class PreconditionError : public std::logic_error {
 public:
  using std::logic_error::logic_error;
};

class NotPrimeError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

/// The requested enumeration would exceed the configured evaluation budget.
class BudgetExceeded : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// An internal consistency check that must never fire did fire.
class ConsistencyError : public std::logic_error {
 public:
  using std::logic_error::logic_error;
};

class ParseError : public std::runtime_error {
 public:
  ParseError(std::size_t line, const std::string& what)
      : std::runtime_error("line " + std::to_string(line) + ": " + what), line_(line) {}

  std::size_t line() const noexcept { return line_; }

 private:
  std::size_t line_;
};

}  // namespace graphclass
