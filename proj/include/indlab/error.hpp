#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace indlab {

/// Malformed input: bad pattern, bad graph, bad flags, unsupported shapes.
class ValidationError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// A file could not be parsed; carries the 1-based offending line.
class ParseError : public ValidationError {
 public:
  ParseError(std::size_t line, const std::string& what)
      : ValidationError("line " + std::to_string(line) + ": " + what), line_(line) {}
  std::size_t line() const noexcept { return line_; }

 private:
  std::size_t line_;
};

/// The exact canonicalizer refuses graphs above its vertex limit.
class CanonicalizationLimit : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// A checked mathematical invariant did not hold. Always a bug in this code.
class InvariantViolation : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// A search ran out of budget; the caller may still hold partial results.
class BudgetExceeded : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

}  // namespace indlab
