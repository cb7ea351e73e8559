#include "kstab/error.hpp"

namespace kstab {

std::string_view to_string(ErrorCode code) {
  switch (code) {
    case ErrorCode::kInvalidArgument: return "InvalidArgument";
    case ErrorCode::kNotFullDimensional: return "NotFullDimensional";
    case ErrorCode::kDimensionUnsupported: return "DimensionUnsupported";
    case ErrorCode::kNotAVertex: return "NotAVertex";
    case ErrorCode::kFitInconsistent: return "FitInconsistent";
    case ErrorCode::kQuasiPeriodMismatch: return "QuasiPeriodMismatch";
    case ErrorCode::kOracleMismatch: return "OracleMismatch";
    case ErrorCode::kDegenerateSubdivision: return "DegenerateSubdivision";
    case ErrorCode::kEmptySupport: return "EmptySupport";
    case ErrorCode::kPreconditionViolated: return "PreconditionViolated";
    case ErrorCode::kNotFound: return "NotFound";
    case ErrorCode::kNotDelzant: return "NotDelzant";
    case ErrorCode::kChopTooDeep: return "ChopTooDeep";
    case ErrorCode::kFitUnstable: return "FitUnstable";
    case ErrorCode::kNonDelzantPoint: return "NonDelzantPoint";
    case ErrorCode::kBudgetExceeded: return "BudgetExceeded";
    case ErrorCode::kParseError: return "ParseError";
    case ErrorCode::kValidationError: return "ValidationError";
  }
  return "Unknown";
}

int exit_code_for(ErrorCode code) {
  switch (code) {
    case ErrorCode::kNotFound:
    case ErrorCode::kBudgetExceeded:
      return 2;
    case ErrorCode::kOracleMismatch:
    case ErrorCode::kFitInconsistent:
    case ErrorCode::kDegenerateSubdivision:
      return 3;
    default:
      return 1;
  }
}

}  // namespace kstab
