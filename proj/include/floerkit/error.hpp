#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

namespace floerkit {

enum class ErrorKind {
  NotAUnit,
  NonUnitPivot,
  DegreeViolation,
  DegenerateCrossing,
  NonTransverseEndpoints,
  ChartMismatch,
  UnsupportedL,
  RequiresModTwoGrading,
  NotAComplex,
  HypothesisViolated,
  OutOfRange,
  Mismatch,
  InvalidInput,
  ParseError,
};

std::string_view to_string(ErrorKind kind);

class Error : public std::runtime_error {
 public:
  Error(ErrorKind kind, const std::string& what);
  ErrorKind kind() const noexcept { return kind_; }

 private:
  ErrorKind kind_;
};

// Line and column are 1-based.
class ParseError : public Error {
 public:
  ParseError(const std::string& what, int line, int column);
  int line() const noexcept { return line_; }
  int column() const noexcept { return column_; }
  const std::string& detail() const noexcept { return detail_; }  // message without the location

 private:
  std::string detail_;
  int line_;
  int column_;
};

}  // namespace floerkit
