#include "sposet/error.hpp"

namespace sposet {

std::string_view to_string(ErrorKind kind) {
  switch (kind) {
    case ErrorKind::EmptyInput: return "EmptyInput";
    case ErrorKind::DuplicateId: return "DuplicateId";
    case ErrorKind::DanglingFaceRef: return "DanglingFaceRef";
    case ErrorKind::RankMismatch: return "RankMismatch";
    case ErrorKind::NonBooleanInterval: return "NonBooleanInterval";
    case ErrorKind::UnknownElement: return "UnknownElement";
    case ErrorKind::NotPure: return "NotPure";
    case ErrorKind::NotConnected: return "NotConnected";
    case ErrorKind::NonFieldCoefficients: return "NonFieldCoefficients";
    case ErrorKind::InvalidCoefficients: return "InvalidCoefficients";
    case ErrorKind::MissingVertexAssignment: return "MissingVertexAssignment";
    case ErrorKind::WrongVectorLength: return "WrongVectorLength";
    case ErrorKind::NonPrimitiveVector: return "NonPrimitiveVector";
    case ErrorKind::BudgetExhausted: return "BudgetExhausted";
    case ErrorKind::InvalidArgument: return "InvalidArgument";
    case ErrorKind::NotBuchsbaum: return "NotBuchsbaum";
    case ErrorKind::InconsistentBundle: return "InconsistentBundle";
    case ErrorKind::InvalidCharFn: return "InvalidCharFn";
    case ErrorKind::UnknownFormat: return "UnknownFormat";
    case ErrorKind::SchemaViolation: return "SchemaViolation";
    case ErrorKind::UnknownName: return "UnknownName";
  }
  return "Unknown";
}

Error::Error(ErrorKind kind, std::string detail)
    : std::runtime_error(std::string(to_string(kind)) + ": " + detail),
      kind_(kind),
      detail_(std::move(detail)) {}

}  // namespace sposet
