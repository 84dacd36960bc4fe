#include "liecat/errors.hpp"

namespace liecat {

std::string_view to_string(ErrorKind kind) {
  switch (kind) {
    case ErrorKind::NonFinite: return "NonFinite";
    case ErrorKind::DomainExit: return "DomainExit";
    case ErrorKind::InvalidMorphism: return "InvalidMorphism";
    case ErrorKind::InvalidObject: return "InvalidObject";
    case ErrorKind::NotComposable: return "NotComposable";
    case ErrorKind::InvalidResult: return "InvalidResult";
    case ErrorKind::SamplerUnavailable: return "SamplerUnavailable";
    case ErrorKind::NotInvertible: return "NotInvertible";
    case ErrorKind::OutwardVector: return "OutwardVector";
    case ErrorKind::NotHomomorphism: return "NotHomomorphism";
    case ErrorKind::InvalidConfiguration: return "InvalidConfiguration";
    case ErrorKind::DimensionMismatch: return "DimensionMismatch";
    case ErrorKind::BadDimension: return "BadDimension";
    case ErrorKind::BoundaryConfiguration: return "BoundaryConfiguration";
    case ErrorKind::ProjectionResidual: return "ProjectionResidual";
    case ErrorKind::Unsupported: return "Unsupported";
    case ErrorKind::InvalidSpec: return "InvalidSpec";
  }
  return "Unknown";
}

bool is_validation_error(ErrorKind kind) { return kind == ErrorKind::InvalidSpec; }

}  // namespace liecat
