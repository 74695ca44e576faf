#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

namespace qci {

// Stable error codes. The numeric values are part of the CLI contract.
enum class ErrorCode {
  parse_error = 10,
  invalid_field = 11,
  unsupported_characteristic = 12,
  ring_mismatch = 13,
  invalid_argument = 14,
  not_homogeneous = 15,
  non_artinian = 16,
  not_minimal = 17,
  division_by_zero = 18,
  malformed_series = 19,
  unsupported_mode = 20,
  bounds_too_small = 21,
  not_quadratic = 22,
  non_minimal_presentation = 23,
  not_koszul = 24,
  too_many_variables = 25,
  internal_inconsistency = 90,
};

std::string_view to_string(ErrorCode code);

class Error : public std::runtime_error {
 public:
  Error(ErrorCode code, const std::string& message)
      : std::runtime_error(message), code_(code) {}

  ErrorCode code() const noexcept { return code_; }

 private:
  ErrorCode code_;
};

// Syntax error with a 1-based source position.
class ParseError : public Error {
 public:
  ParseError(const std::string& message, int line, int column);

  int line() const noexcept { return line_; }
  int column() const noexcept { return column_; }

 private:
  int line_;
  int column_;
};

}  // namespace qci
