#ifndef LEDC_ERROR_HPP
#define LEDC_ERROR_HPP

#include <stdexcept>
#include <string>
#include <string_view>

namespace ledc {

enum class ErrorKind {
  InvalidArgument,
  NotPrime,
  FieldTooSmall,
  DivisionByZero,
  NotSquare,
  Inconsistent,
  Underdetermined,
  DuplicatePoint,
  IndexOutOfRange,
  DimensionMismatch,
  DivisionByZeroPoly,
  Overflow,
  CoverageGap,
  OverlapN,
  GroupTooSmall,
  EmptyGroup,
  TooManyGroups,
  PreconditionViolated,
  NotEnoughSymbols,
  PositionsOutsideGroup,
  SingularSubmatrix,
  UnrecoverableErasurePattern,
  TooLarge,
  DegenerateSystem,
  NotPrimitive,
  ExhaustedAttempts,
  ParseError,
};

constexpr std::string_view to_string(ErrorKind kind) noexcept {
  switch (kind) {
    case ErrorKind::InvalidArgument: return "InvalidArgument";
    case ErrorKind::NotPrime: return "NotPrime";
    case ErrorKind::FieldTooSmall: return "FieldTooSmall";
    case ErrorKind::DivisionByZero: return "DivisionByZero";
    case ErrorKind::NotSquare: return "NotSquare";
    case ErrorKind::Inconsistent: return "Inconsistent";
    case ErrorKind::Underdetermined: return "Underdetermined";
    case ErrorKind::DuplicatePoint: return "DuplicatePoint";
    case ErrorKind::IndexOutOfRange: return "IndexOutOfRange";
    case ErrorKind::DimensionMismatch: return "DimensionMismatch";
    case ErrorKind::DivisionByZeroPoly: return "DivisionByZeroPoly";
    case ErrorKind::Overflow: return "Overflow";
    case ErrorKind::CoverageGap: return "CoverageGap";
    case ErrorKind::OverlapN: return "OverlapN";
    case ErrorKind::GroupTooSmall: return "GroupTooSmall";
    case ErrorKind::EmptyGroup: return "EmptyGroup";
    case ErrorKind::TooManyGroups: return "TooManyGroups";
    case ErrorKind::PreconditionViolated: return "PreconditionViolated";
    case ErrorKind::NotEnoughSymbols: return "NotEnoughSymbols";
    case ErrorKind::PositionsOutsideGroup: return "PositionsOutsideGroup";
    case ErrorKind::SingularSubmatrix: return "SingularSubmatrix";
    case ErrorKind::UnrecoverableErasurePattern: return "UnrecoverableErasurePattern";
    case ErrorKind::TooLarge: return "TooLarge";
    case ErrorKind::DegenerateSystem: return "DegenerateSystem";
    case ErrorKind::NotPrimitive: return "NotPrimitive";
    case ErrorKind::ExhaustedAttempts: return "ExhaustedAttempts";
    case ErrorKind::ParseError: return "ParseError";
  }
  return "Unknown";
}

/// Every failure raised by the library carries a machine-checkable kind.
class Error : public std::runtime_error {
 public:
  Error(ErrorKind kind, const std::string& what)
      : std::runtime_error(std::string(to_string(kind)) + ": " + what), kind_(kind) {}

  ErrorKind kind() const noexcept { return kind_; }

 private:
  ErrorKind kind_;
};

}  // namespace ledc

#endif  // LEDC_ERROR_HPP
