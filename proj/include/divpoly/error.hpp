#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

namespace divpoly {

enum class ErrorKind {
  DimensionMismatch,
  UnitMissing,
  NotAssociative,
  NotCentral,
  DimensionOne,
  LemmaMatrixSingular,
  ZeroDivisor,
  ZeroElement,
  AmbientMismatch,
  NotQuaternionAmbient,
  LengthMismatch,
  IndexOutOfRange,
  NotAnIdentity,
  BadExponent,
  SyntaxError,
  UnknownSymbol,
  VariableOutOfRange,
  InvalidFormat,
};

std::string_view error_name(ErrorKind kind);

// All domain failures are reported through this type; `kind()` names the
// violated contract and `what()` carries the human-readable detail.
class Error : public std::runtime_error {
 public:
  Error(ErrorKind kind, const std::string& detail)
      : std::runtime_error(std::string(error_name(kind)) + ": " + detail), kind_(kind) {}

  ErrorKind kind() const noexcept { return kind_; }

 private:
  ErrorKind kind_;
};

}  // namespace divpoly
