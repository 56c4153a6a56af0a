#include "cdindex/errors.hpp"

namespace cdindex {

std::string_view to_string(ErrorKind kind) noexcept {
  switch (kind) {
    case ErrorKind::CycleDetected: return "CycleDetected";
    case ErrorKind::NotGraded: return "NotGraded";
    case ErrorKind::RequiresBounds: return "RequiresBounds";
    case ErrorKind::RequiresMin: return "RequiresMin";
    case ErrorKind::MissingBounds: return "MissingBounds";
    case ErrorKind::NotNearEulerian: return "NotNearEulerian";
    case ErrorKind::NotALattice: return "NotALattice";
    case ErrorKind::NotCdExpressible: return "NotCdExpressible";
    case ErrorKind::DegreeTooHigh: return "DegreeTooHigh";
    case ErrorKind::RankTooLarge: return "RankTooLarge";
    case ErrorKind::DomainError: return "DomainError";
    case ErrorKind::FaceNotFound: return "FaceNotFound";
    case ErrorKind::NotPure: return "NotPure";
    case ErrorKind::InvalidSubdivision: return "InvalidSubdivision";
    case ErrorKind::InvalidChain: return "InvalidChain";
    case ErrorKind::NotLowerEulerian: return "NotLowerEulerian";
    case ErrorKind::IdentityViolated: return "IdentityViolated";
    case ErrorKind::ValidationRequired: return "ValidationRequired";
    case ErrorKind::ConventionMismatch: return "ConventionMismatch";
    case ErrorKind::UnknownElement: return "UnknownElement";
    case ErrorKind::Parse: return "Parse";
  }
  return "Unknown";
}

}  // namespace cdindex
