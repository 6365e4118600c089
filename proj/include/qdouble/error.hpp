#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

namespace qdouble {

enum class ErrorCode {
  ClosureTooLarge,
  NotABijection,
  SingularMatrix,
  NotASubgroup,
  NotAnIndicator,
  GroupMismatch,
  OracleMismatch,
  NonIntegerDimension,
  NonIntegerFusion,
  NegativeFusion,
  UnknownEntry,
  ParameterOutOfRange,
  ParseError,
  VerificationFailed,
  Internal,
};

constexpr std::string_view error_name(ErrorCode code) {
  switch (code) {
    case ErrorCode::ClosureTooLarge: return "ClosureTooLarge";
    case ErrorCode::NotABijection: return "NotABijection";
    case ErrorCode::SingularMatrix: return "SingularMatrix";
    case ErrorCode::NotASubgroup: return "NotASubgroup";
    case ErrorCode::NotAnIndicator: return "NotAnIndicator";
    case ErrorCode::GroupMismatch: return "GroupMismatch";
    case ErrorCode::OracleMismatch: return "OracleMismatch";
    case ErrorCode::NonIntegerDimension: return "NonIntegerDimension";
    case ErrorCode::NonIntegerFusion: return "NonIntegerFusion";
    case ErrorCode::NegativeFusion: return "NegativeFusion";
    case ErrorCode::UnknownEntry: return "UnknownEntry";
    case ErrorCode::ParameterOutOfRange: return "ParameterOutOfRange";
    case ErrorCode::ParseError: return "ParseError";
    case ErrorCode::VerificationFailed: return "VerificationFailed";
    case ErrorCode::Internal: return "Internal";
  }
  return "Unknown";
}

/// Every failure raised by the library carries one of the codes above so the
/// CLI can emit a machine-readable error record.
class Error : public std::runtime_error {
 public:
  Error(ErrorCode code, const std::string& message)
      : std::runtime_error(std::string(error_name(code)) + ": " + message), code_(code) {}

  ErrorCode code() const noexcept { return code_; }

 private:
  ErrorCode code_;
};

}  // namespace qdouble
