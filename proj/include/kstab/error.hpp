#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

namespace kstab {

enum class ErrorCode {
  kInvalidArgument,
  kNotFullDimensional,
  kDimensionUnsupported,
  kNotAVertex,
  kFitInconsistent,
  kQuasiPeriodMismatch,
  kOracleMismatch,
  kDegenerateSubdivision,
  kEmptySupport,
  kPreconditionViolated,
  kNotFound,
  kNotDelzant,
  kChopTooDeep,
  kFitUnstable,
  kNonDelzantPoint,
  kBudgetExceeded,
  kParseError,
  kValidationError,
};

std::string_view to_string(ErrorCode code);

class Error : public std::runtime_error {
 public:
  Error(ErrorCode code, const std::string& message)
      : std::runtime_error(std::string(to_string(code)) + ": " + message), code_(code) {}

  ErrorCode code() const noexcept { return code_; }

 private:
  ErrorCode code_;
};

// CLI exit status: 1 validation/input, 2 NotFound or budget outcome, 3 internal oracle mismatch.
int exit_code_for(ErrorCode code);

}  // namespace kstab
