#include "adet/errors.hpp"

namespace adet {

const char* error_code_name(ErrorCode c) {
  switch (c) {
    case ErrorCode::LastCoordNotOne: return "LastCoordNotOne";
    case ErrorCode::DuplicatePoint: return "DuplicatePoint";
    case ErrorCode::DoesNotSpan: return "DoesNotSpan";
    case ErrorCode::RegistryMismatch: return "RegistryMismatch";
    case ErrorCode::MissingAssignment: return "MissingAssignment";
    case ErrorCode::FaceNotInLattice: return "FaceNotInLattice";
    case ErrorCode::ZeroCoordinate: return "ZeroCoordinate";
    case ErrorCode::VariableLimitExceeded: return "VariableLimitExceeded";
    case ErrorCode::DimensionTooLarge: return "DimensionTooLarge";
    case ErrorCode::DimBoundViolation: return "DimBoundViolation";
    case ErrorCode::InconsistentOracles: return "InconsistentOracles";
    case ErrorCode::InvalidInput: return "InvalidInput";
    case ErrorCode::Internal: return "Internal";
  }
  return "Unknown";
}

}  // namespace adet
