#include "mdecomp/error.hpp"

namespace mdecomp {

std::string_view to_string(ErrorCode code) {
  switch (code) {
    case ErrorCode::kAxiomViolation: return "AxiomViolation";
    case ErrorCode::kDuplicateElement: return "DuplicateElement";
    case ErrorCode::kUnknownElement: return "UnknownElement";
    case ErrorCode::kInvalidParams: return "InvalidParams";
    case ErrorCode::kUnknownVertex: return "UnknownVertex";
    case ErrorCode::kInvalidMatrix: return "InvalidMatrix";
    case ErrorCode::kDependentInput: return "DependentInput";
    case ErrorCode::kNotDependent: return "NotDependent";
    case ErrorCode::kGroundSetTooLarge: return "GroundSetTooLarge";
    case ErrorCode::kGroundSetMismatch: return "GroundSetMismatch";
    case ErrorCode::kNotCrossing: return "NotCrossing";
    case ErrorCode::kQuadrantTooSmall: return "QuadrantTooSmall";
    case ErrorCode::kNotACircuit: return "NotACircuit";
    case ErrorCode::kPreconditionViolated: return "PreconditionViolated";
    case ErrorCode::kNotA2Separation: return "NotA2Separation";
    case ErrorCode::kFamilyNotDisjoint: return "FamilyNotDisjoint";
    case ErrorCode::kDisconnected: return "Disconnected";
    case ErrorCode::kBadSharedElement: return "BadSharedElement";
    case ErrorCode::kNotNested: return "NotNested";
    case ErrorCode::kNotSymmetric: return "NotSymmetric";
    case ErrorCode::kTooSmall: return "TooSmall";
    case ErrorCode::kUnclassifiable: return "Unclassifiable";
    case ErrorCode::kNotATree: return "NotATree";
    case ErrorCode::kNotAPartition: return "NotAPartition";
    case ErrorCode::kParseError: return "ParseError";
    case ErrorCode::kLemmaFailure: return "LemmaFailure";
  }
  return "Unknown";
}

}  // namespace mdecomp
