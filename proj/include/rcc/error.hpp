#pragma once

#include <stdexcept>
#include <string>

namespace rcc {

enum class ErrorCode {
  Malformed,
  LabelMultiplicity,
  Disconnected,
  NonPlanar,
  IndexMismatch,
  SameComponent,
  UnknownCrossing,
  BudgetExceeded,
  InternalInconsistency,
  CheckFailed,
};

const char* to_string(ErrorCode code);

class Error : public std::runtime_error {
 public:
  Error(ErrorCode code, const std::string& message)
      : std::runtime_error(std::string(to_string(code)) + ": " + message), code_(code) {}

  ErrorCode code() const { return code_; }

  /// Input errors map to exit status 1, broken invariants to 2.
  bool is_input_error() const {
    return code_ != ErrorCode::InternalInconsistency && code_ != ErrorCode::CheckFailed;
  }

 private:
  ErrorCode code_;
};

}  // namespace rcc
