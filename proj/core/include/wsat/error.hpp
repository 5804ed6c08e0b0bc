#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace wsat {

/// Bad caller input: malformed files, violated preconditions, foreign elements.
class InvalidInput : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

/// A parse failure pinned to a 1-based line of the input text.
class ParseError : public InvalidInput {
 public:
  ParseError(std::size_t line, const std::string& what)
      : InvalidInput("line " + std::to_string(line) + ": " + what), line_(line) {}

  std::size_t line() const noexcept { return line_; }

 private:
  std::size_t line_;
};

/// An internal self-check failed: an unverified matroid, a construction that
/// did not reproduce its rank, a transferred seed that did not percolate.
class VerificationFailure : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

}  // namespace wsat
