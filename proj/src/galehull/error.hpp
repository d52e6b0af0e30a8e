#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

namespace galehull {

enum class ErrorCode {
  ParseError,
  NotCubic,
  BadEdge,
  EulerViolation,
  Disconnected,
  DegenerateFace,
  NotThreeColorable,
  UnknownName,
  OddPrism,
  BadParameters,
  DimensionMismatch,
  TheoremViolation,
  DiagramMismatch,
  CriterionMismatch,
  StructureMismatch,
  PointOutsideAffineHull,
  DegenerateInput,
  TooManyPoints,
  TooLarge,
};

std::string_view to_string(ErrorCode code) noexcept;

// Thrown by every module of the core. `module()` names the component that
// raised it so callers can report provenance.
class Error : public std::runtime_error {
 public:
  Error(ErrorCode code, std::string module, const std::string& message)
      : std::runtime_error(message), code_(code), module_(std::move(module)) {}

  ErrorCode code() const noexcept { return code_; }
  const std::string& module() const noexcept { return module_; }

 private:
  ErrorCode code_;
  std::string module_;
};

}  // namespace galehull
