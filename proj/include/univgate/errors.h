#pragma once

#include <stdexcept>
#include <string>

namespace univgate {

enum class ErrorCode {
  kNotUnitary,
  kDetNotOne,
  kNotReal,
  kBadDimension,
  kNumericalFailure,
  kDimensionMismatch,
  kEmptyInput,
  kUnsupportedGroup,
  kBadLambda,
  kBadArgument,
  kNotClosed,
  kSetBudgetExceeded,
  kCommutingPair,
  kNotObstructedShape,
  kParse,
};

const char* error_code_name(ErrorCode code);

/// All library failures are reported through this exception type.
class Error : public std::runtime_error {
 public:
  Error(ErrorCode code, const std::string& message);

  ErrorCode code() const { return code_; }

 private:
  ErrorCode code_;
};

}  // namespace univgate
