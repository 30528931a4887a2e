#pragma once

#include <stdexcept>
#include <string>

namespace edcalc {

enum class ErrorCode {
  DimensionMismatch,
  EnumerationTooLarge,
  EmptySpec,
  InvalidRank,
  NotReduced,
  NotABasis,
  InvalidArgument,
  NonAbelianQuotient,
  Parse,
};

const char* error_code_name(ErrorCode code) noexcept;

class Error : public std::runtime_error {
 public:
  Error(ErrorCode code, const std::string& what)
      : std::runtime_error(what), code_(code) {}

  ErrorCode code() const noexcept { return code_; }

 private:
  ErrorCode code_;
};

// Raised by validate() when e_i lies in mu; `factor` is 1-based.
class NotReducedError : public Error {
 public:
  NotReducedError(int factor, const std::string& what)
      : Error(ErrorCode::NotReduced, what), factor_(factor) {}

  int factor() const noexcept { return factor_; }

 private:
  int factor_;
};

}  // namespace edcalc
