#include "qdom/error.hpp"

namespace qdom {

std::string_view to_string(ErrorKind kind) noexcept {
  switch (kind) {
    case ErrorKind::DegenerateInput: return "DegenerateInput";
    case ErrorKind::ConditioningError: return "ConditioningError";
    case ErrorKind::InvalidFactor: return "InvalidFactor";
    case ErrorKind::IllPosedComposition: return "IllPosedComposition";
    case ErrorKind::BoundaryPole: return "BoundaryPole";
    case ErrorKind::BranchAmbiguity: return "BranchAmbiguity";
    case ErrorKind::TooCloseToBoundary: return "TooCloseToBoundary";
    case ErrorKind::PreconditionViolation: return "PreconditionViolation";
    case ErrorKind::FactorizationAmbiguous: return "FactorizationAmbiguous";
    case ErrorKind::EmptyModelSpace: return "EmptyModelSpace";
    case ErrorKind::SymmetryViolation: return "SymmetryViolation";
    case ErrorKind::InvalidTestFunction: return "InvalidTestFunction";
    case ErrorKind::DegenerateCurve: return "DegenerateCurve";
    case ErrorKind::DegreeBoundError: return "DegreeBoundError";
    case ErrorKind::NoData: return "NoData";
    case ErrorKind::SchemaError: return "SchemaError";
  }
  return "Unknown";
}

}  // namespace qdom
