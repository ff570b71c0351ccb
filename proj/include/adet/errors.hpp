#pragma once

#include <stdexcept>
#include <string>

namespace adet {

enum class ErrorCode {
  LastCoordNotOne,
  DuplicatePoint,
  DoesNotSpan,
  RegistryMismatch,
  MissingAssignment,
  FaceNotInLattice,
  ZeroCoordinate,
  VariableLimitExceeded,
  DimensionTooLarge,
  DimBoundViolation,
  InconsistentOracles,
  InvalidInput,
  Internal,
};

const char* error_code_name(ErrorCode c);

class Error : public std::runtime_error {
 public:
  Error(ErrorCode code, std::string message)
      : std::runtime_error(std::move(message)), code_(code) {}
  Error(ErrorCode code, std::string message, long index_a, long index_b = -1)
      : std::runtime_error(std::move(message)),
        code_(code),
        index_a_(index_a),
        index_b_(index_b) {}

  ErrorCode code() const { return code_; }
  // 1-based indices of the offending datum, -1 when not applicable.
  long index_a() const { return index_a_; }
  long index_b() const { return index_b_; }

 private:
  ErrorCode code_;
  long index_a_ = -1;
  long index_b_ = -1;
};

}  // namespace adet
