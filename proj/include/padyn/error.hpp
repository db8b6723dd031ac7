#pragma once

#include <stdexcept>
#include <string>

namespace padyn {

enum class ErrorCode {
  InvalidArgument,
  NotPrime,
  ZeroDenominator,
  PrimeMismatch,
  DivisionByZero,
  PrecisionExhausted,
  ZeroInput,
  NoSquareRoot,
  UnitNormParameter,
  RegimeMismatch,
  BudgetExceeded,
  PredicateMismatch,
};

const char* to_string(ErrorCode code) noexcept;

class Error : public std::runtime_error {
 public:
  Error(ErrorCode code, const std::string& what)
      : std::runtime_error(what), code_(code) {}

  ErrorCode code() const noexcept { return code_; }

 private:
  ErrorCode code_;
};

}  // namespace padyn
