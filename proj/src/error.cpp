#include "orichrome/error.hpp"

namespace orichrome {

const char* error_code_name(ErrorCode code) {
  switch (code) {
    case ErrorCode::kNonAdjacent: return "NonAdjacent";
    case ErrorCode::kParseError: return "ParseError";
    case ErrorCode::kInvariantViolation: return "InvariantViolation";
    case ErrorCode::kTooLarge: return "TooLarge";
    case ErrorCode::kCapExceeded: return "CapExceeded";
    case ErrorCode::kBudgetExceeded: return "BudgetExceeded";
    case ErrorCode::kDomainError: return "DomainError";
    case ErrorCode::kPreconditionViolated: return "PreconditionViolated";
    case ErrorCode::kDegeneracyViolation: return "DegeneracyViolation";
    case ErrorCode::kInvalidInner: return "InvalidInner";
    case ErrorCode::kInvalidClass: return "InvalidClass";
    case ErrorCode::kConstraintConflict: return "ConstraintConflict";
    case ErrorCode::kArityExceeded: return "ArityExceeded";
    case ErrorCode::kClassCollision: return "ClassCollision";
    case ErrorCode::kCapacityExceeded: return "CapacityExceeded";
    case ErrorCode::kNotReduced: return "NotReduced";
    case ErrorCode::kGenusAssumptionViolated: return "GenusAssumptionViolated";
    case ErrorCode::kNonConvergence: return "NonConvergence";
    case ErrorCode::kNoRealizer: return "NoRealizer";
  }
  return "Unknown";
}

Error::Error(ErrorCode code, const std::string& what)
    : std::runtime_error(std::string(error_code_name(code)) + ": " + what), code_(code) {}

ParseError::ParseError(std::size_t line, const std::string& what)
    : Error(ErrorCode::kParseError, "line " + std::to_string(line) + ": " + what), line_(line) {}

}  // namespace orichrome
