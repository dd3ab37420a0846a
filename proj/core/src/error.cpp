#include "ellab/error.hpp"

namespace ellab {

std::string_view to_string(ErrorCode code) {
  switch (code) {
    case ErrorCode::MalformedInput: return "MalformedInput";
    case ErrorCode::SumNot12: return "SumNot12";
    case ErrorCode::TooFewFibers: return "TooFewFibers";
    case ErrorCode::NotPrime: return "NotPrime";
    case ErrorCode::UnsupportedPrime: return "UnsupportedPrime";
    case ErrorCode::NotInCatalog: return "NotInCatalog";
    case ErrorCode::ConflictingLabels: return "ConflictingLabels";
    case ErrorCode::SideMismatch: return "SideMismatch";
    case ErrorCode::MissingFlag: return "MissingFlag";
    case ErrorCode::HypothesesNotMet: return "HypothesesNotMet";
  }
  return "Unknown";
}

Error::Error(ErrorCode code, const std::string& what)
    : std::runtime_error(std::string(to_string(code)) + ": " + what), code_(code) {}

}  // namespace ellab
