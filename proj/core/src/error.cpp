#include "fewembed/error.hpp"

namespace fewembed {

std::string_view to_string(ErrorCode code) {
  switch (code) {
    case ErrorCode::kInvalidArgument: return "InvalidArgument";
    case ErrorCode::kVertexOutOfRange: return "VertexOutOfRange";
    case ErrorCode::kEmptyGroundSet: return "EmptyGroundSet";
    case ErrorCode::kEmptyFaceInFamily: return "EmptyFaceInFamily";
    case ErrorCode::kGroundSetTooLarge: return "GroundSetTooLarge";
    case ErrorCode::kVoidComplex: return "VoidComplex";
    case ErrorCode::kWrongGroundSetSize: return "WrongGroundSetSize";
    case ErrorCode::kSearchBudgetExceeded: return "SearchBudgetExceeded";
    case ErrorCode::kConstructionFailed: return "ConstructionFailed";
    case ErrorCode::kDegenerateHull: return "DegenerateHull";
    case ErrorCode::kViewpointSearchFailed: return "ViewpointSearchFailed";
    case ErrorCode::kDimensionMismatch: return "DimensionMismatch";
    case ErrorCode::kUnplacedVertex: return "UnplacedVertex";
    case ErrorCode::kNotOnSphere: return "NotOnSphere";
    case ErrorCode::kMalformedInput: return "MalformedInput";
  }
  return "Unknown";
}

}  // namespace fewembed
