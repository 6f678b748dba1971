#include "commdeg/error.hpp"

namespace commdeg {

std::string_view to_string(ErrorCode code) {
  switch (code) {
    case ErrorCode::NotLatin: return "NotLatin";
    case ErrorCode::NonAssociative: return "NonAssociative";
    case ErrorCode::NotIdentity: return "NotIdentity";
    case ErrorCode::OrderCapExceeded: return "OrderCapExceeded";
    case ErrorCode::InvalidAction: return "InvalidAction";
    case ErrorCode::IndexOutOfRange: return "IndexOutOfRange";
    case ErrorCode::NotNormal: return "NotNormal";
    case ErrorCode::NotSubgroup: return "NotSubgroup";
    case ErrorCode::NotHomomorphism: return "NotHomomorphism";
    case ErrorCode::NotPrime: return "NotPrime";
    case ErrorCode::AntitoneViolation: return "AntitoneViolation";
    case ErrorCode::IncompatibleSelector: return "IncompatibleSelector";
    case ErrorCode::IncompatiblePath: return "IncompatiblePath";
    case ErrorCode::WeightMismatch: return "WeightMismatch";
    case ErrorCode::NonConvergence: return "NonConvergence";
    case ErrorCode::ModulusViolation: return "ModulusViolation";
    case ErrorCode::UnknownPreset: return "UnknownPreset";
    case ErrorCode::PresetMismatch: return "PresetMismatch";
    case ErrorCode::InvalidArgument: return "InvalidArgument";
    case ErrorCode::Parse: return "Parse";
  }
  return "Unknown";
}

}  // namespace commdeg
