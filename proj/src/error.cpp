#include "qdsfusion/error.hpp"

namespace qds {

std::string_view to_string(ErrorKind kind) noexcept {
  switch (kind) {
    case ErrorKind::InvalidFrame: return "InvalidFrame";
    case ErrorKind::UnknownLabel: return "UnknownLabel";
    case ErrorKind::EmptyFocalSet: return "EmptyFocalSet";
    case ErrorKind::NegativeMass: return "NegativeMass";
    case ErrorKind::MassSumViolation: return "MassSumViolation";
    case ErrorKind::FrameMismatch: return "FrameMismatch";
    case ErrorKind::TotalConflict: return "TotalConflict";
    case ErrorKind::WeightSumViolation: return "WeightSumViolation";
    case ErrorKind::InvalidArgument: return "InvalidArgument";
    case ErrorKind::OrderOutOfRange: return "OrderOutOfRange";
    case ErrorKind::NonPositiveArgument: return "NonPositiveArgument";
    case ErrorKind::NonPositiveDistance: return "NonPositiveDistance";
    case ErrorKind::ComplexOrderRegime: return "ComplexOrderRegime";
    case ErrorKind::InvalidParameter: return "InvalidParameter";
    case ErrorKind::DegenerateCurve: return "DegenerateCurve";
    case ErrorKind::AllUnreliable: return "AllUnreliable";
    case ErrorKind::MissingReliability: return "MissingReliability";
    case ErrorKind::ParseError: return "ParseError";
    case ErrorKind::ValidationError: return "ValidationError";
  }
  return "Unknown";
}

bool is_mathematical_failure(ErrorKind kind) noexcept {
  return kind == ErrorKind::TotalConflict || kind == ErrorKind::AllUnreliable ||
         kind == ErrorKind::DegenerateCurve;
}

}  // namespace qds
