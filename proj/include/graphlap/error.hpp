#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

namespace graphlap {

enum class ErrorCode {
  DimensionMismatch,
  OracleInconsistent,
  BadFamilyParameter,
  BadRadii,
  InsufficientDomain,
  InvalidLambda,
  SingularSystem,
  ChainViolation,
  NotStabilized,
  LiftFailed,
  ParseError,
};

std::string_view to_string(ErrorCode code);

/// Single exception type for the library; the code distinguishes the
/// expected outcomes (e.g. a singular finite graph) from bugs.
class Error : public std::runtime_error {
public:
  Error(ErrorCode code, const std::string& what)
      : std::runtime_error(std::string(to_string(code)) + ": " + what), code_(code) {}

  ErrorCode code() const noexcept { return code_; }

private:
  ErrorCode code_;
};

}  // namespace graphlap
