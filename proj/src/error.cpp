#include "tropsym/error.hpp"

namespace tropsym {

const char* errorCodeName(ErrorCode code) {
  switch (code) {
    case ErrorCode::kDimensionMismatch: return "dimension_mismatch";
    case ErrorCode::kInfInverse: return "inf_inverse";
    case ErrorCode::kNegativeExponentAtInf: return "negative_exponent_at_inf";
    case ErrorCode::kSyntax: return "syntax_error";
    case ErrorCode::kUnknownVariable: return "unknown_variable";
    case ErrorCode::kNotSymmetric: return "not_symmetric";
    case ErrorCode::kResourceCap: return "resource_cap";
    case ErrorCode::kInvalidArgument: return "invalid_argument";
    case ErrorCode::kDecompositionFailed: return "decomposition_failed";
    case ErrorCode::kInternal: return "internal";
  }
  return "unknown";
}

}  // namespace tropsym
