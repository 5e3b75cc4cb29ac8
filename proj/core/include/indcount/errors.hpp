#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace indcount {

/// Base class for every error raised by the library.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// A precondition on the arguments was violated (bad vertex, duplicate edge,
/// probability out of range, non-triangle-free input where one is required).
class InvalidInput : public Error {
 public:
  using Error::Error;
};

/// Malformed instance text. `line()` is 1-based.
class ParseError : public InvalidInput {
 public:
  ParseError(std::size_t line, const std::string& what)
      : InvalidInput("line " + std::to_string(line) + ": " + what), line_(line) {}

  std::size_t line() const noexcept { return line_; }

 private:
  std::size_t line_;
};

/// An exact search exceeded its node budget. Never accompanied by a partial
/// answer.
class BudgetExceeded : public Error {
 public:
  using Error::Error;
};

/// Exact generator gave up (e.g. rejection sampling could not place an edge).
class GenerationFailure : public Error {
 public:
  using Error::Error;
};

}  // namespace indcount
