#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>
#include <string_view>

namespace afprov {

enum class ErrorCode {
  InvalidToken,
  MemberNotInAF,
  UnknownArgument,
  TooLargeForOracle,
  InvariantViolation,
  NoCriticalSetFound,
  BudgetExceeded,
  InvalidDelta,
  SyntaxError,
  MissingSeparator,
  LayoutMismatch,
  SchemaError,
};

std::string_view to_string(ErrorCode code) noexcept;

// Base of every exception thrown by the library; the code is machine-readable.
class Error : public std::runtime_error {
 public:
  Error(ErrorCode code, const std::string& message)
      : std::runtime_error(message), code_(code) {}

  ErrorCode code() const noexcept { return code_; }

 private:
  ErrorCode code_;
};

// Parse failure with a 1-based source position.
class SyntaxError : public Error {
 public:
  SyntaxError(ErrorCode code, std::size_t line, std::size_t column,
              const std::string& message);

  std::size_t line() const noexcept { return line_; }
  std::size_t column() const noexcept { return column_; }

 private:
  std::size_t line_;
  std::size_t column_;
};

}  // namespace afprov
