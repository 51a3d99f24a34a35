#include "graphlap/error.hpp"

namespace graphlap {

std::string_view to_string(ErrorCode code) {
  switch (code) {
    case ErrorCode::DimensionMismatch: return "DimensionMismatch";
    case ErrorCode::OracleInconsistent: return "OracleInconsistent";
    case ErrorCode::BadFamilyParameter: return "BadFamilyParameter";
    case ErrorCode::BadRadii: return "BadRadii";
    case ErrorCode::InsufficientDomain: return "InsufficientDomain";
    case ErrorCode::InvalidLambda: return "InvalidLambda";
    case ErrorCode::SingularSystem: return "SingularSystem";
    case ErrorCode::ChainViolation: return "ChainViolation";
    case ErrorCode::NotStabilized: return "NotStabilized";
    case ErrorCode::LiftFailed: return "LiftFailed";
    case ErrorCode::ParseError: return "ParseError";
  }
  return "Unknown";
}

}  // namespace graphlap
