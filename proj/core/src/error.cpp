#include "qci/error.hpp"

namespace qci {

std::string_view to_string(ErrorCode code) {
  switch (code) {
    case ErrorCode::parse_error: return "parse_error";
    case ErrorCode::invalid_field: return "invalid_field";
    case ErrorCode::unsupported_characteristic: return "unsupported_characteristic";
    case ErrorCode::ring_mismatch: return "ring_mismatch";
    case ErrorCode::invalid_argument: return "invalid_argument";
    case ErrorCode::not_homogeneous: return "not_homogeneous";
    case ErrorCode::non_artinian: return "non_artinian";
    case ErrorCode::not_minimal: return "not_minimal";
    case ErrorCode::division_by_zero: return "division_by_zero";
    case ErrorCode::malformed_series: return "malformed_series";
    case ErrorCode::unsupported_mode: return "unsupported_mode";
    case ErrorCode::bounds_too_small: return "bounds_too_small";
    case ErrorCode::not_quadratic: return "not_quadratic";
    case ErrorCode::non_minimal_presentation: return "non_minimal_presentation";
    case ErrorCode::not_koszul: return "not_koszul";
    case ErrorCode::too_many_variables: return "too_many_variables";
    case ErrorCode::internal_inconsistency: return "internal_inconsistency";
  }
  return "unknown";
}

ParseError::ParseError(const std::string& message, int line, int column)
    : Error(ErrorCode::parse_error,
            std::to_string(line) + ":" + std::to_string(column) + ": " + message),
      line_(line),
      column_(column) {}

}  // namespace qci
