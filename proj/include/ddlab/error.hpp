#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace ddlab {

enum class ErrorCode {
  parse,
  duplicate_point,
  empty_set,
  invalid_argument,
  degenerate_degree,
  zero_polynomial,
  shared_component,
  not_a_circle,
  precondition,
  unsupported_curve,
  box_too_small,
  unknown_family,
  unrealized_distance,
  budget_exceeded,
  io,
};

const char* to_string(ErrorCode code);

class Error : public std::runtime_error {
 public:
  Error(ErrorCode code, const std::string& what)
      : std::runtime_error(what), code_(code) {}

  ErrorCode code() const noexcept { return code_; }

 private:
  ErrorCode code_;
};

// Line and column are 1-based; zero means "not applicable".
class ParseError : public Error {
 public:
  ParseError(const std::string& message, std::size_t line, std::size_t column);

  std::size_t line() const noexcept { return line_; }
  std::size_t column() const noexcept { return column_; }

 private:
  std::size_t line_;
  std::size_t column_;
};

}  // namespace ddlab
