#include "cubicloop/error.hpp"

namespace cubicloop {

std::string_view to_string(ErrorKind kind) {
  switch (kind) {
    case ErrorKind::PrecisionExhausted: return "PrecisionExhausted";
    case ErrorKind::NonUnitInverse: return "NonUnitInverse";
    case ErrorKind::NonIntegralQuotient: return "NonIntegralQuotient";
    case ErrorKind::PointsCoincide: return "PointsCoincide";
    case ErrorKind::DegenerateLine: return "DegenerateLine";
    case ErrorKind::NotTangentDirection: return "NotTangentDirection";
    case ErrorKind::HenselCriterionFailed: return "HenselCriterionFailed";
    case ErrorKind::NotOnSurface: return "NotOnSurface";
    case ErrorKind::AdmissibilityViolation: return "AdmissibilityViolation";
    case ErrorKind::InvalidTable: return "InvalidTable";
    case ErrorKind::Parse: return "ParseError";
    case ErrorKind::Io: return "IoError";
  }
  return "UnknownError";
}

}  // namespace cubicloop
