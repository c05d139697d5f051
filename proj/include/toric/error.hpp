#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>
#include <string_view>

namespace toric {

enum class ErrorCode {
  ZeroVector,
  NotPrimitive,
  DuplicateRay,
  NotCounterclockwise,
  NotComplete,
  TooFewRays,
  ShapeError,
  Singular,
  IndexOutOfRange,
  NotNormalized,
  SmoothVertexRequired,
  UnsupportedOrientation,
  DegeneratePolygon,
  NonConvexPolygon,
  GenerationFailed,
  InvalidArgument,
  ParseError,
  AmbiguousDocument,
  IoError,
  InternalError,
};

std::string_view error_code_name(ErrorCode code);

/// Every failure raised by the library. `index()` / `other_index()` carry the
/// 1-based ray labels involved, when the error concerns specific rays.
class Error : public std::runtime_error {
 public:
  Error(ErrorCode code, const std::string& what, std::size_t index = 0,
        std::size_t other_index = 0)
      : std::runtime_error(what), code_(code), index_(index), other_index_(other_index) {}

  ErrorCode code() const noexcept { return code_; }
  std::size_t index() const noexcept { return index_; }
  std::size_t other_index() const noexcept { return other_index_; }

 private:
  ErrorCode code_;
  std::size_t index_;
  std::size_t other_index_;
};

}  // namespace toric
