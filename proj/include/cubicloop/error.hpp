#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

namespace cubicloop {

enum class ErrorKind {
  PrecisionExhausted,
  NonUnitInverse,
  NonIntegralQuotient,
  PointsCoincide,
  DegenerateLine,
  NotTangentDirection,
  HenselCriterionFailed,
  NotOnSurface,
  AdmissibilityViolation,
  InvalidTable,
  Parse,
  Io,
};

std::string_view to_string(ErrorKind kind);

/// All recoverable failures in the library are reported through this type;
/// `kind()` is what callers dispatch on (retry at higher precision, exit code).
class Error : public std::runtime_error {
 public:
  Error(ErrorKind kind, const std::string& what)
      : std::runtime_error(std::string(to_string(kind)) + ": " + what), kind_(kind) {}

  ErrorKind kind() const noexcept { return kind_; }

 private:
  ErrorKind kind_;
};

}  // namespace cubicloop
