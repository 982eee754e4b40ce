#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

namespace polysurf {

enum class ErrorKind {
  // malformed gluing data / complexes
  DuplicateSlot,
  SelfPairedSlot,
  BadSideCount,
  BadSlot,
  DuplicateFace,
  // input documents
  SyntaxError,
  SchemaError,
  // preconditions of individual operations
  BadVertexType,
  BadParameters,
  UnknownFamily,
  HasBoundary,
  NonOrientable,
  EmptyProfile,
  UnboundedQuery,
  EmptyCatalog,
  NonPositiveC0,
  LimitTooSmall,
  MismatchedBase,
  RadiusTooSmall,
  BadN,
  NotPositivelyCurved,
  MeshTooFine,
  HypothesisViolated,
  EmptySelection,
  ClosedSelection,
  BallTouchesBoundary,
  NotPlanar,
  LayoutDegenerate,
  // numerical
  NonConvergence,
  // internal consistency failures (bugs, not bad input)
  Disconnected,
  InconsistentDevelopment,
};

constexpr std::string_view to_string(ErrorKind kind) {
  switch (kind) {
    case ErrorKind::DuplicateSlot: return "DuplicateSlot";
    case ErrorKind::SelfPairedSlot: return "SelfPairedSlot";
    case ErrorKind::BadSideCount: return "BadSideCount";
    case ErrorKind::BadSlot: return "BadSlot";
    case ErrorKind::DuplicateFace: return "DuplicateFace";
    case ErrorKind::SyntaxError: return "SyntaxError";
    case ErrorKind::SchemaError: return "SchemaError";
    case ErrorKind::BadVertexType: return "BadVertexType";
    case ErrorKind::BadParameters: return "BadParameters";
    case ErrorKind::UnknownFamily: return "UnknownFamily";
    case ErrorKind::HasBoundary: return "HasBoundary";
    case ErrorKind::NonOrientable: return "NonOrientable";
    case ErrorKind::EmptyProfile: return "EmptyProfile";
    case ErrorKind::UnboundedQuery: return "UnboundedQuery";
    case ErrorKind::EmptyCatalog: return "EmptyCatalog";
    case ErrorKind::NonPositiveC0: return "NonPositiveC0";
    case ErrorKind::LimitTooSmall: return "LimitTooSmall";
    case ErrorKind::MismatchedBase: return "MismatchedBase";
    case ErrorKind::RadiusTooSmall: return "RadiusTooSmall";
    case ErrorKind::BadN: return "BadN";
    case ErrorKind::NotPositivelyCurved: return "NotPositivelyCurved";
    case ErrorKind::MeshTooFine: return "MeshTooFine";
    case ErrorKind::HypothesisViolated: return "HypothesisViolated";
    case ErrorKind::EmptySelection: return "EmptySelection";
    case ErrorKind::ClosedSelection: return "ClosedSelection";
    case ErrorKind::BallTouchesBoundary: return "BallTouchesBoundary";
    case ErrorKind::NotPlanar: return "NotPlanar";
    case ErrorKind::LayoutDegenerate: return "LayoutDegenerate";
    case ErrorKind::NonConvergence: return "NonConvergence";
    case ErrorKind::Disconnected: return "Disconnected";
    case ErrorKind::InconsistentDevelopment: return "InconsistentDevelopment";
  }
  return "Unknown";
}

/// Every failure raised by the library. `kind()` is the stable, testable part;
/// the message is for humans.
class Error : public std::runtime_error {
 public:
  Error(ErrorKind kind, const std::string& message)
      : std::runtime_error(std::string(to_string(kind)) + ": " + message), kind_(kind) {}

  ErrorKind kind() const noexcept { return kind_; }

  /// True for failures that indicate a bug rather than bad input.
  bool is_internal() const noexcept {
    return kind_ == ErrorKind::Disconnected || kind_ == ErrorKind::InconsistentDevelopment;
  }

 private:
  ErrorKind kind_;
};

}  // namespace polysurf
