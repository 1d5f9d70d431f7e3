#include "univgate/errors.h"

namespace univgate {

const char* error_code_name(ErrorCode code) {
  switch (code) {
    case ErrorCode::kNotUnitary: return "NotUnitary";
    case ErrorCode::kDetNotOne: return "DetNotOne";
    case ErrorCode::kNotReal: return "NotReal";
    case ErrorCode::kBadDimension: return "BadDimension";
    case ErrorCode::kNumericalFailure: return "NumericalFailure";
    case ErrorCode::kDimensionMismatch: return "DimensionMismatch";
    case ErrorCode::kEmptyInput: return "EmptyInput";
    case ErrorCode::kUnsupportedGroup: return "UnsupportedGroup";
    case ErrorCode::kBadLambda: return "BadLambda";
    case ErrorCode::kBadArgument: return "BadArgument";
    case ErrorCode::kNotClosed: return "NotClosed";
    case ErrorCode::kSetBudgetExceeded: return "SetBudgetExceeded";
    case ErrorCode::kCommutingPair: return "CommutingPair";
    case ErrorCode::kNotObstructedShape: return "NotObstructedShape";
    case ErrorCode::kParse: return "Parse";
  }
  return "Unknown";
}

Error::Error(ErrorCode code, const std::string& message)
    : std::runtime_error(std::string(error_code_name(code)) + ": " + message),
      code_(code) {}

}  // namespace univgate
