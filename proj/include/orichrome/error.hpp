#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace orichrome {

enum class ErrorCode {
  kNonAdjacent,
  kParseError,
  kInvariantViolation,
  kTooLarge,
  kCapExceeded,
  kBudgetExceeded,
  kDomainError,
  kPreconditionViolated,
  kDegeneracyViolation,
  kInvalidInner,
  kInvalidClass,
  kConstraintConflict,
  kArityExceeded,
  kClassCollision,
  kCapacityExceeded,
  kNotReduced,
  kGenusAssumptionViolated,
  kNonConvergence,
  kNoRealizer,
};

const char* error_code_name(ErrorCode code);

// All library failures are reported through this type; `code()` lets callers
// (the CLI in particular) map failures onto exit codes without string matching.
class Error : public std::runtime_error {
 public:
  Error(ErrorCode code, const std::string& what);

  ErrorCode code() const noexcept { return code_; }

 private:
  ErrorCode code_;
};

class ParseError : public Error {
 public:
  ParseError(std::size_t line, const std::string& what);

  std::size_t line() const noexcept { return line_; }

 private:
  std::size_t line_;
};

}  // namespace orichrome
