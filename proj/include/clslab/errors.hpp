#pragma once

#include <stdexcept>
#include <string>
#include <vector>

namespace clslab {

class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// Shape mismatch between vectors/matrices/circuits.
class DimensionError : public Error {
 public:
  using Error::Error;
};

// A tie that the non-degeneracy assumption rules out. `indices` names the
// tied coordinates (0-based) when there are any.
class DegeneracyError : public Error {
 public:
  DegeneracyError(const std::string& what, std::vector<std::size_t> indices = {})
      : Error(what), indices_(std::move(indices)) {}
  const std::vector<std::size_t>& indices() const { return indices_; }

 private:
  std::vector<std::size_t> indices_;
};

// Caller broke an operation's precondition.
class PreconditionError : public Error {
 public:
  using Error::Error;
};

// An input violates a documented contract (e.g. a back-mapper fed a
// non-solution).
class ContractError : public Error {
 public:
  using Error::Error;
};

// Something the construction guarantees did not hold. Always a bug.
class InvariantViolation : public Error {
 public:
  using Error::Error;
};

// A point left the unit cube.
class DomainError : public Error {
 public:
  using Error::Error;
};

class BudgetExceeded : public Error {
 public:
  using Error::Error;
};

class ParseError : public Error {
 public:
  ParseError(const std::string& what, std::size_t line = 0)
      : Error(line ? "line " + std::to_string(line) + ": " + what : what), line_(line) {}
  std::size_t line() const { return line_; }

 private:
  std::size_t line_;
};

}  // namespace clslab
