#include "tcshift/error.hpp"

namespace tcshift {

std::string_view to_string(ErrorCode code) {
  switch (code) {
    case ErrorCode::AtomAtZero: return "AtomAtZero";
    case ErrorCode::NotProbability: return "NotProbability";
    case ErrorCode::InvalidWeight: return "InvalidWeight";
    case ErrorCode::InvalidMeasure: return "InvalidMeasure";
    case ErrorCode::DegenerateMeasure: return "DegenerateMeasure";
    case ErrorCode::NotSubnormal: return "NotSubnormal";
    case ErrorCode::DepthExceeded: return "DepthExceeded";
    case ErrorCode::PreconditionViolated: return "PreconditionViolated";
    case ErrorCode::InvalidFlat: return "InvalidFlat";
    case ErrorCode::ParseError: return "ParseError";
  }
  return "Unknown";
}

}  // namespace tcshift
