#include "toric/error.hpp"

namespace toric {

std::string_view error_code_name(ErrorCode code) {
  switch (code) {
    case ErrorCode::ZeroVector: return "ZeroVector";
    case ErrorCode::NotPrimitive: return "NotPrimitive";
    case ErrorCode::DuplicateRay: return "DuplicateRay";
    case ErrorCode::NotCounterclockwise: return "NotCounterclockwise";
    case ErrorCode::NotComplete: return "NotComplete";
    case ErrorCode::TooFewRays: return "TooFewRays";
    case ErrorCode::ShapeError: return "ShapeError";
    case ErrorCode::Singular: return "Singular";
    case ErrorCode::IndexOutOfRange: return "IndexOutOfRange";
    case ErrorCode::NotNormalized: return "NotNormalized";
    case ErrorCode::SmoothVertexRequired: return "SmoothVertexRequired";
    case ErrorCode::UnsupportedOrientation: return "UnsupportedOrientation";
    case ErrorCode::DegeneratePolygon: return "DegeneratePolygon";
    case ErrorCode::NonConvexPolygon: return "NonConvexPolygon";
    case ErrorCode::GenerationFailed: return "GenerationFailed";
    case ErrorCode::InvalidArgument: return "InvalidArgument";
    case ErrorCode::ParseError: return "ParseError";
    case ErrorCode::AmbiguousDocument: return "AmbiguousDocument";
    case ErrorCode::IoError: return "IoError";
    case ErrorCode::InternalError: return "InternalError";
  }
  return "Unknown";
}

}  // namespace toric
