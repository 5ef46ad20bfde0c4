#pragma once

#include <stdexcept>
#include <string>

namespace apc {

// Stable error taxonomy; the names are the wire-level error codes used by
// the C API and the CLI output documents.
enum class ErrorCode {
  malformed_input,
  invalid_descriptor,
  descriptor_mismatch,
  search_bound_exceeded,
  membership_violation,
  no_decomposition_available,
  decomposition_mismatch,
  not_a_polynomial,
  not_homogeneous_degree_2,
  degenerate_input,
  degree_violation,
  overflow,
  invalid_argument,
  internal,
};

inline const char* error_code_name(ErrorCode code) {
  switch (code) {
    case ErrorCode::malformed_input: return "malformed_input";
    case ErrorCode::invalid_descriptor: return "invalid_descriptor";
    case ErrorCode::descriptor_mismatch: return "descriptor_mismatch";
    case ErrorCode::search_bound_exceeded: return "search_bound_exceeded";
    case ErrorCode::membership_violation: return "membership_violation";
    case ErrorCode::no_decomposition_available: return "no_decomposition_available";
    case ErrorCode::decomposition_mismatch: return "decomposition_mismatch";
    case ErrorCode::not_a_polynomial: return "not_a_polynomial";
    case ErrorCode::not_homogeneous_degree_2: return "not_homogeneous_degree_2";
    case ErrorCode::degenerate_input: return "degenerate_input";
    case ErrorCode::degree_violation: return "degree_violation";
    case ErrorCode::overflow: return "overflow";
    case ErrorCode::invalid_argument: return "invalid_argument";
    case ErrorCode::internal: return "internal";
  }
  return "internal";
}

class Error : public std::runtime_error {
 public:
  Error(ErrorCode code, const std::string& message)
      : std::runtime_error(message), code_(code) {}

  ErrorCode code() const { return code_; }
  const char* code_name() const { return error_code_name(code_); }

 private:
  ErrorCode code_;
};

[[noreturn]] inline void fail(ErrorCode code, const std::string& message) {
  throw Error(code, message);
}

}  // namespace apc
