#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace wreath {

/// Base class of every error raised by the library.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// A precondition on arguments was violated (mismatched groups, out-of-range
/// parameters, unsupported mode combinations).
class DomainError : public Error {
 public:
  using Error::Error;
};

/// A brute-force oracle hit its element or frontier budget.
class BudgetExceeded : public Error {
 public:
  BudgetExceeded(const std::string& what, std::size_t budget)
      : Error(what + " (budget " + std::to_string(budget) + ")"), budget_(budget) {}

  std::size_t budget() const noexcept { return budget_; }

 private:
  std::size_t budget_;
};

/// Malformed literal. Carries the offending input and the byte offset of the
/// first bad character so callers can render a caret.
class ParseError : public Error {
 public:
  ParseError(std::string message, std::string input, std::size_t offset)
      : Error(message), message_(std::move(message)), input_(std::move(input)), offset_(offset) {}

  const std::string& message() const noexcept { return message_; }
  const std::string& input() const noexcept { return input_; }
  std::size_t offset() const noexcept { return offset_; }

  /// Three-line rendering: message, input, caret under the offset.
  std::string annotated() const {
    return message_ + "\n  " + input_ + "\n  " + std::string(offset_, ' ') + "^";
  }

 private:
  std::string message_;
  std::string input_;
  std::size_t offset_;
};

}  // namespace wreath
