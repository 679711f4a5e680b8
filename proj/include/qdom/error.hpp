#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

namespace qdom {

/// Failure categories shared by every module. The CLI reports them by name.
enum class ErrorKind {
  DegenerateInput,
  ConditioningError,
  InvalidFactor,
  IllPosedComposition,
  BoundaryPole,
  BranchAmbiguity,
  TooCloseToBoundary,
  PreconditionViolation,
  FactorizationAmbiguous,
  EmptyModelSpace,
  SymmetryViolation,
  InvalidTestFunction,
  DegenerateCurve,
  DegreeBoundError,
  NoData,
  SchemaError,
};

std::string_view to_string(ErrorKind kind) noexcept;

class Error : public std::runtime_error {
 public:
  Error(ErrorKind kind, const std::string& message)
      : std::runtime_error(message), kind_(kind) {}

  ErrorKind kind() const noexcept { return kind_; }

 private:
  ErrorKind kind_;
};

[[noreturn]] inline void fail(ErrorKind kind, const std::string& message) {
  throw Error(kind, message);
}

}  // namespace qdom
