#pragma once

#include <stdexcept>
#include <string>
#include <utility>

namespace tlearn {

enum class ErrorCode {
  missing_column,
  non_numeric_cell,
  bad_treatment_value,
  empty_body,
  offset_unsupported,
  empty_data,
  non_finite_input,
  shape_mismatch,
  bad_fold_count,
  loss_target_mismatch,
  single_arm_data,
  too_few_observations,
  degenerate_fluctuation,
  unsupported_estimand,
  bad_argument,
  io_failure,
};

/// Library-wide exception carrying a stable error code. Input/parse problems
/// map to CLI exit code 2, computation failures to exit code 1.
class TlError : public std::runtime_error {
public:
  TlError(ErrorCode code, std::string msg)
      : std::runtime_error(std::move(msg)), code_(code) {}

  ErrorCode code() const noexcept { return code_; }

  bool parse_failure() const noexcept {
    switch (code_) {
      case ErrorCode::missing_column:
      case ErrorCode::non_numeric_cell:
      case ErrorCode::bad_treatment_value:
      case ErrorCode::empty_body:
      case ErrorCode::bad_argument:
      case ErrorCode::io_failure:
        return true;
      default:
        return false;
    }
  }

private:
  ErrorCode code_;
};

[[noreturn]] inline void fail(ErrorCode code, const std::string& msg) {
  throw TlError(code, msg);
}

}  // namespace tlearn
