#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace vcldim {

class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// Malformed input text. `line` is 1-based; 0 when the error is not tied to a
// particular line (e.g. premature end of input).
class ParseError : public Error {
 public:
  ParseError(std::size_t line, const std::string& what)
      : Error("line " + std::to_string(line) + ": " + what), line_(line) {}
  std::size_t line() const { return line_; }

 private:
  std::size_t line_;
};

// Argument outside an operation's domain: bad index, empty class where a
// dimension is requested, violated parameter ordering.
class InvalidArgument : public Error {
 public:
  using Error::Error;
};

// Instance too large for the configured enumeration budget or size guard.
class BudgetExceeded : public Error {
 public:
  using Error::Error;
};

}  // namespace vcldim
