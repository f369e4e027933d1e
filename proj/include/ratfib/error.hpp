#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

namespace ratfib {

enum class ErrorCode {
  DimensionMismatch,
  ZeroForm,
  PreconditionViolation,
  GenericityFailure,
  InsufficientPrecision,
  EliminationFailure,
  DegenerateConfiguration,
  LimitNotInX,
  ShapeMismatch,
  NonIntegralLambda,
  GeneralPositionFailure,
  BasePointInput,
  ParseError,
};

/// Stable machine-readable name, used verbatim in CLI reports.
std::string_view code_name(ErrorCode code);

class Error : public std::runtime_error {
 public:
  Error(ErrorCode code, const std::string& what)
      : std::runtime_error(what), code_(code) {}

  ErrorCode code() const noexcept { return code_; }

 private:
  ErrorCode code_;
};

}  // namespace ratfib
