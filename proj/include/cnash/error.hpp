#pragma once

#include <stdexcept>
#include <string>

namespace cnash {

enum class ErrorCode {
  kDimensionMismatch,
  kInvalidArgument,
  kInfeasible,
  kPrecondition,
  kParse,
  kUsage,
};

inline const char* error_code_name(ErrorCode code) {
  switch (code) {
    case ErrorCode::kDimensionMismatch: return "dimension_mismatch";
    case ErrorCode::kInvalidArgument: return "invalid_argument";
    case ErrorCode::kInfeasible: return "infeasible";
    case ErrorCode::kPrecondition: return "precondition_failed";
    case ErrorCode::kParse: return "parse_error";
    case ErrorCode::kUsage: return "usage";
  }
  return "unknown";
}

/// Every failure in the library is reported with one of these; `code()` is
/// stable and machine readable, `what()` is for humans.
class Error : public std::runtime_error {
 public:
  Error(ErrorCode code, const std::string& message) : std::runtime_error(message), code_(code) {}

  ErrorCode code() const noexcept { return code_; }
  const char* code_name() const noexcept { return error_code_name(code_); }

 private:
  ErrorCode code_;
};

}  // namespace cnash
