#include "errors.hpp"

namespace cmpgeo {

const char* error_kind_name(ErrorKind k) {
  switch (k) {
    case ErrorKind::ParseError: return "ParseError";
    case ErrorKind::InvalidPresentation: return "InvalidPresentation";
    case ErrorKind::InvalidRelation: return "InvalidRelation";
    case ErrorKind::InvalidCharacteristic: return "InvalidCharacteristic";
    case ErrorKind::NotFiniteDimensional: return "NotFiniteDimensional";
    case ErrorKind::InvalidRep: return "InvalidRep";
    case ErrorKind::RelationViolated: return "RelationViolated";
    case ErrorKind::DimensionMismatch: return "DimensionMismatch";
    case ErrorKind::AlgebraMismatch: return "AlgebraMismatch";
    case ErrorKind::NotAHomomorphism: return "NotAHomomorphism";
    case ErrorKind::FieldTooSmall: return "FieldTooSmall";
    case ErrorKind::Inconclusive: return "Inconclusive";
    case ErrorKind::OrbitBoundExceeded: return "OrbitBoundExceeded";
    case ErrorKind::NotGorenstein: return "NotGorenstein";
    case ErrorKind::InvalidArc: return "InvalidArc";
    case ErrorKind::NotATriangulation: return "NotATriangulation";
    case ErrorKind::UnsupportedTaggedConfiguration: return "UnsupportedTaggedConfiguration";
    case ErrorKind::InvalidLabel: return "InvalidLabel";
    case ErrorKind::TypeOther: return "TypeOther";
    case ErrorKind::InvariantViolated: return "InvariantViolated";
    case ErrorKind::IncompleteIndecomposableList: return "IncompleteIndecomposableList";
  }
  return "Unknown";
}

ErrorClass error_class(ErrorKind k) {
  switch (k) {
    case ErrorKind::ParseError:
    case ErrorKind::InvalidPresentation:
    case ErrorKind::InvalidRelation:
    case ErrorKind::InvalidCharacteristic:
    case ErrorKind::InvalidRep:
    case ErrorKind::RelationViolated:
    case ErrorKind::DimensionMismatch:
    case ErrorKind::AlgebraMismatch:
    case ErrorKind::InvalidArc:
    case ErrorKind::NotATriangulation:
    case ErrorKind::InvalidLabel:
      return ErrorClass::Input;
    case ErrorKind::NotFiniteDimensional:
    case ErrorKind::FieldTooSmall:
    case ErrorKind::Inconclusive:
    case ErrorKind::OrbitBoundExceeded:
    case ErrorKind::NotGorenstein:
    case ErrorKind::UnsupportedTaggedConfiguration:
    case ErrorKind::TypeOther:
    case ErrorKind::IncompleteIndecomposableList:
      return ErrorClass::Limitation;
    case ErrorKind::NotAHomomorphism:
    case ErrorKind::InvariantViolated:
      return ErrorClass::Verification;
  }
  return ErrorClass::Verification;
}

}  // namespace cmpgeo
