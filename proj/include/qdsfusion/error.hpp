#pragma once

#include <cstddef>
#include <optional>
#include <stdexcept>
#include <string>
#include <string_view>

namespace qds {

enum class ErrorKind {
  InvalidFrame,
  UnknownLabel,
  EmptyFocalSet,
  NegativeMass,
  MassSumViolation,
  FrameMismatch,
  TotalConflict,
  WeightSumViolation,
  InvalidArgument,
  OrderOutOfRange,
  NonPositiveArgument,
  NonPositiveDistance,
  ComplexOrderRegime,
  InvalidParameter,
  DegenerateCurve,
  AllUnreliable,
  MissingReliability,
  ParseError,
  ValidationError,
};

std::string_view to_string(ErrorKind kind) noexcept;

// True for failures caused by the mathematics of the inputs rather than by
// malformed input (mapped to a distinct CLI exit code).
bool is_mathematical_failure(ErrorKind kind) noexcept;

class Error : public std::runtime_error {
 public:
  Error(ErrorKind kind, const std::string& message,
        std::optional<std::size_t> step = std::nullopt)
      : std::runtime_error(message), kind_(kind), step_(step) {}

  ErrorKind kind() const noexcept { return kind_; }

  // Zero-based index of the failing combination step, when applicable.
  std::optional<std::size_t> step() const noexcept { return step_; }

 private:
  ErrorKind kind_;
  std::optional<std::size_t> step_;
};

}  // namespace qds
