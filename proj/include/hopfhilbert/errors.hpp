#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

namespace hopfhilbert {

enum class ErrorKind {
  ZeroDenominator,
  PoleAtZero,
  DivisionNotExact,
  ShapeMismatch,
  SingularMatrix,
  InternalSingularity,
  NotAGroup,
  NotSemisimple,
  IntegralSpaceDimension,
  InvalidInput,
  CapExceeded,
  NotIdempotent,
  ParseError,
  InternalAssertion,
};

constexpr std::string_view to_string(ErrorKind kind) {
  switch (kind) {
    case ErrorKind::ZeroDenominator: return "ZeroDenominator";
    case ErrorKind::PoleAtZero: return "PoleAtZero";
    case ErrorKind::DivisionNotExact: return "DivisionNotExact";
    case ErrorKind::ShapeMismatch: return "ShapeMismatch";
    case ErrorKind::SingularMatrix: return "SingularMatrix";
    case ErrorKind::InternalSingularity: return "InternalSingularity";
    case ErrorKind::NotAGroup: return "NotAGroup";
    case ErrorKind::NotSemisimple: return "NotSemisimple";
    case ErrorKind::IntegralSpaceDimension: return "IntegralSpaceDimension";
    case ErrorKind::InvalidInput: return "InvalidInput";
    case ErrorKind::CapExceeded: return "CapExceeded";
    case ErrorKind::NotIdempotent: return "NotIdempotent";
    case ErrorKind::ParseError: return "ParseError";
    case ErrorKind::InternalAssertion: return "InternalAssertion";
  }
  return "Unknown";
}

/// Single exception type for the library; `kind()` distinguishes the failure.
class Error : public std::runtime_error {
 public:
  Error(ErrorKind kind, const std::string& what)
      : std::runtime_error(what), kind_(kind) {}

  ErrorKind kind() const noexcept { return kind_; }

 private:
  ErrorKind kind_;
};

[[noreturn]] inline void fail(ErrorKind kind, const std::string& what) {
  throw Error(kind, what);
}

inline void require(bool cond, ErrorKind kind, const std::string& what) {
  if (!cond) fail(kind, what);
}

}  // namespace hopfhilbert
