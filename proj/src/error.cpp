#include "floerkit/error.hpp"

namespace floerkit {

std::string_view to_string(ErrorKind kind) {
  switch (kind) {
    case ErrorKind::NotAUnit: return "NotAUnit";
    case ErrorKind::NonUnitPivot: return "NonUnitPivot";
    case ErrorKind::DegreeViolation: return "DegreeViolation";
    case ErrorKind::DegenerateCrossing: return "DegenerateCrossing";
    case ErrorKind::NonTransverseEndpoints: return "NonTransverseEndpoints";
    case ErrorKind::ChartMismatch: return "ChartMismatch";
    case ErrorKind::UnsupportedL: return "UnsupportedL";
    case ErrorKind::RequiresModTwoGrading: return "RequiresModTwoGrading";
    case ErrorKind::NotAComplex: return "NotAComplex";
    case ErrorKind::HypothesisViolated: return "HypothesisViolated";
    case ErrorKind::OutOfRange: return "OutOfRange";
    case ErrorKind::Mismatch: return "Mismatch";
    case ErrorKind::InvalidInput: return "InvalidInput";
    case ErrorKind::ParseError: return "ParseError";
  }
  return "Unknown";
}

Error::Error(ErrorKind kind, const std::string& what)
    : std::runtime_error(std::string(to_string(kind)) + ": " + what), kind_(kind) {}

ParseError::ParseError(const std::string& what, int line, int column)
    : Error(ErrorKind::ParseError,
            what + " at line " + std::to_string(line) + ", column " + std::to_string(column)),
      detail_(what),
      line_(line),
      column_(column) {}

}  // namespace floerkit
