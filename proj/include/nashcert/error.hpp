#pragma once

#include <cstddef>
#include <ostream>
#include <stdexcept>
#include <string>
#include <string_view>

namespace nashcert {

enum class ErrorCode {
  SpaceMismatch,
  UnknownVariable,
  ZeroInput,
  Degenerate,
  SliceExhausted,
  IncompatiblePart,
  DimensionMismatch,
  RegionTooHostile,
  InvalidArgument,
  Syntax,
};

std::string_view to_string(ErrorCode code);

inline std::ostream& operator<<(std::ostream& os, ErrorCode code) { return os << to_string(code); }

/// Base error for every failure the library reports. The code drives the CLI
/// exit status, the message is for humans.
class Error : public std::runtime_error {
 public:
  Error(ErrorCode code, const std::string& message)
      : std::runtime_error(message), code_(code) {}

  ErrorCode code() const noexcept { return code_; }

 private:
  ErrorCode code_;
};

/// Syntax error with a 1-based source position.
class ParseError : public Error {
 public:
  ParseError(const std::string& message, std::size_t line, std::size_t column)
      : Error(ErrorCode::Syntax, message + " at line " + std::to_string(line) +
                                     ", column " + std::to_string(column)),
        line_(line),
        column_(column) {}

  std::size_t line() const noexcept { return line_; }
  std::size_t column() const noexcept { return column_; }

 private:
  std::size_t line_;
  std::size_t column_;
};

}  // namespace nashcert
