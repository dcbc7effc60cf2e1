#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

namespace sposet {

enum class ErrorKind {
  // poset-core
  EmptyInput,
  DuplicateId,
  DanglingFaceRef,
  RankMismatch,
  NonBooleanInterval,
  UnknownElement,
  NotPure,
  NotConnected,
  // homology / spectral
  NonFieldCoefficients,
  InvalidCoefficients,
  // charfn
  MissingVertexAssignment,
  WrongVectorLength,
  NonPrimitiveVector,
  BudgetExhausted,
  InvalidArgument,
  // spectral
  NotBuchsbaum,
  InconsistentBundle,
  InvalidCharFn,
  // cli-io
  UnknownFormat,
  SchemaViolation,
  UnknownName,
};

std::string_view to_string(ErrorKind kind);

/// All library failures are reported through this exception. `what()` is
/// "<Kind>: <detail>"; `detail()` keeps the bare message for re-wrapping.
class Error : public std::runtime_error {
 public:
  Error(ErrorKind kind, std::string detail);

  ErrorKind kind() const noexcept { return kind_; }
  const std::string& detail() const noexcept { return detail_; }

 private:
  ErrorKind kind_;
  std::string detail_;
};

}  // namespace sposet
