#include "galehull/error.hpp"

namespace galehull {

std::string_view to_string(ErrorCode code) noexcept {
  switch (code) {
    case ErrorCode::ParseError: return "ParseError";
    case ErrorCode::NotCubic: return "NotCubic";
    case ErrorCode::BadEdge: return "BadEdge";
    case ErrorCode::EulerViolation: return "EulerViolation";
    case ErrorCode::Disconnected: return "Disconnected";
    case ErrorCode::DegenerateFace: return "DegenerateFace";
    case ErrorCode::NotThreeColorable: return "NotThreeColorable";
    case ErrorCode::UnknownName: return "UnknownName";
    case ErrorCode::OddPrism: return "OddPrism";
    case ErrorCode::BadParameters: return "BadParameters";
    case ErrorCode::DimensionMismatch: return "DimensionMismatch";
    case ErrorCode::TheoremViolation: return "TheoremViolation";
    case ErrorCode::DiagramMismatch: return "DiagramMismatch";
    case ErrorCode::CriterionMismatch: return "CriterionMismatch";
    case ErrorCode::StructureMismatch: return "StructureMismatch";
    case ErrorCode::PointOutsideAffineHull: return "PointOutsideAffineHull";
    case ErrorCode::DegenerateInput: return "DegenerateInput";
    case ErrorCode::TooManyPoints: return "TooManyPoints";
    case ErrorCode::TooLarge: return "TooLarge";
  }
  return "Unknown";
}

}  // namespace galehull
