#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace hrgpg {

// Base for every exception thrown by the library.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// Malformed grammar, graph or positional text. `line` is 1-based, 0 if unknown.
class SyntaxError : public Error {
 public:
  SyntaxError(std::size_t line, const std::string& what)
      : Error(line ? "line " + std::to_string(line) + ": " + what : what), line_(line) {}
  std::size_t line() const noexcept { return line_; }

 private:
  std::size_t line_;
};

class IoError : public Error {
 public:
  using Error::Error;
};

// A desk-scale bound (isomorphism edges, enumeration frontier, permutation
// search) was exceeded. The toolkit refuses instead of degrading.
class BudgetError : public Error {
 public:
  using Error::Error;
};

// Operation applied to values that violate its precondition
// (label/arity mismatch, disconnected rhs, non-bijective ordering, ...).
class DomainError : public Error {
 public:
  using Error::Error;
};

// Two or more input edges satisfy one fetch: recognition is nondeterministic.
class AmbiguityError : public Error {
 public:
  using Error::Error;
};

}  // namespace hrgpg
