#include "edcalc/error.hpp"

namespace edcalc {

const char* error_code_name(ErrorCode code) noexcept {
  switch (code) {
    case ErrorCode::DimensionMismatch: return "DimensionMismatch";
    case ErrorCode::EnumerationTooLarge: return "EnumerationTooLarge";
    case ErrorCode::EmptySpec: return "EmptySpec";
    case ErrorCode::InvalidRank: return "InvalidRank";
    case ErrorCode::NotReduced: return "NotReduced";
    case ErrorCode::NotABasis: return "NotABasis";
    case ErrorCode::InvalidArgument: return "InvalidArgument";
    case ErrorCode::NonAbelianQuotient: return "NonAbelianQuotient";
    case ErrorCode::Parse: return "Parse";
  }
  return "Unknown";
}

}  // namespace edcalc
