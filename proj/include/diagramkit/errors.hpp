#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace diagramkit {

class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// Bad graph manipulation: unknown ids, illegal blowups, non-contractible
// vertices.
class GraphError : public Error {
 public:
  using Error::Error;
};

class PreconditionError : public Error {
 public:
  using Error::Error;
};

class BudgetExceeded : public Error {
 public:
  BudgetExceeded(const std::string& what, std::size_t budget)
      : Error(what + " (budget " + std::to_string(budget) + ")"), budget_(budget) {}
  std::size_t budget() const { return budget_; }

 private:
  std::size_t budget_;
};

// A threshold at or above the supremum of a coefficient family.
class InfiniteTail : public Error {
 public:
  using Error::Error;
};

class ParseError : public Error {
 public:
  ParseError(std::size_t line, const std::string& message)
      : Error("line " + std::to_string(line) + ": " + message), line_(line) {}
  std::size_t line() const { return line_; }

 private:
  std::size_t line_;
};

}  // namespace diagramkit
