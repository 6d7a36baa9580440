#pragma once

#include <stdexcept>
#include <string>

namespace cct {

enum class ErrorCode {
  DivisionByZero,
  PoleProjection,
  DegenerateAnchor,
  DegenerateTangent,
  FixedPointViolation,
  OrbitCollision,
  ProjectionNotInjective,
  DegenerateInput,
  CoplanarQuads,
  ZeroDenominator,
  BadNormalization,
  ExtensionDegenerate,
  CertificationFailure,
  RankDeficient,
  NotCoplanar,
  Precondition,
  MeetDegenerate,
  WedgeIntersectsPolytope,
  HemisphereViolation,
  SeparationFailure,
  TransversalityFailure,
  RationalityFailure,
  PrecisionExhausted,
  MissingCertificate,
  Schema,
  NotInConvexPosition,
  NotLocallyConvex,
  LocalHypothesisFails,
  GlobalConclusionFails,
  NotReciprocal,
  NotOrientationPreserving,
  MembershipFailure,
};

inline const char* error_name(ErrorCode c) {
  switch (c) {
    case ErrorCode::DivisionByZero: return "DivisionByZero";
    case ErrorCode::PoleProjection: return "PoleProjection";
    case ErrorCode::DegenerateAnchor: return "DegenerateAnchor";
    case ErrorCode::DegenerateTangent: return "DegenerateTangent";
    case ErrorCode::FixedPointViolation: return "FixedPointViolation";
    case ErrorCode::OrbitCollision: return "OrbitCollision";
    case ErrorCode::ProjectionNotInjective: return "ProjectionNotInjective";
    case ErrorCode::DegenerateInput: return "DegenerateInput";
    case ErrorCode::CoplanarQuads: return "CoplanarQuads";
    case ErrorCode::ZeroDenominator: return "ZeroDenominator";
    case ErrorCode::BadNormalization: return "BadNormalization";
    case ErrorCode::ExtensionDegenerate: return "ExtensionDegenerate";
    case ErrorCode::CertificationFailure: return "CertificationFailure";
    case ErrorCode::RankDeficient: return "RankDeficient";
    case ErrorCode::NotCoplanar: return "NotCoplanar";
    case ErrorCode::Precondition: return "Precondition";
    case ErrorCode::MeetDegenerate: return "MeetDegenerate";
    case ErrorCode::WedgeIntersectsPolytope: return "WedgeIntersectsPolytope";
    case ErrorCode::HemisphereViolation: return "HemisphereViolation";
    case ErrorCode::SeparationFailure: return "SeparationFailure";
    case ErrorCode::TransversalityFailure: return "TransversalityFailure";
    case ErrorCode::RationalityFailure: return "RationalityFailure";
    case ErrorCode::PrecisionExhausted: return "PrecisionExhausted";
    case ErrorCode::MissingCertificate: return "MissingCertificate";
    case ErrorCode::Schema: return "Schema";
    case ErrorCode::NotInConvexPosition: return "NotInConvexPosition";
    case ErrorCode::NotLocallyConvex: return "NotLocallyConvex";
    case ErrorCode::LocalHypothesisFails: return "LocalHypothesisFails";
    case ErrorCode::GlobalConclusionFails: return "GlobalConclusionFails";
    case ErrorCode::NotReciprocal: return "NotReciprocal";
    case ErrorCode::NotOrientationPreserving: return "NotOrientationPreserving";
    case ErrorCode::MembershipFailure: return "MembershipFailure";
  }
  return "Unknown";
}

// All library failures are reported through this one exception type.
class Error : public std::runtime_error {
 public:
  Error(ErrorCode code, const std::string& what)
      : std::runtime_error(std::string(error_name(code)) + ": " + what), code_(code) {}
  ErrorCode code() const noexcept { return code_; }

 private:
  ErrorCode code_;
};

}  // namespace cct
