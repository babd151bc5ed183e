#include "sgt/error.hpp"

namespace sgt {

  char const* to_string(ErrorCode code) noexcept {
    switch (code) {
      case ErrorCode::NonSquare: return "NonSquare";
      case ErrorCode::OutOfRange: return "OutOfRange";
      case ErrorCode::NotAssociative: return "NotAssociative";
      case ErrorCode::OrderCapExceeded: return "OrderCapExceeded";
      case ErrorCode::NotACongruence: return "NotACongruence";
      case ErrorCode::NotABand: return "NotABand";
      case ErrorCode::NotAMorphism: return "NotAMorphism";
      case ErrorCode::NotClosed: return "NotClosed";
      case ErrorCode::NotAbundant: return "NotAbundant";
      case ErrorCode::NotAdequate: return "NotAdequate";
      case ErrorCode::NotQuasiAdequate: return "NotQuasiAdequate";
      case ErrorCode::NotLeftAdequate: return "NotLeftAdequate";
      case ErrorCode::NotRightAdequate: return "NotRightAdequate";
      case ErrorCode::NotLeftAmple: return "NotLeftAmple";
      case ErrorCode::NoMinimum: return "NoMinimum";
      case ErrorCode::NotAdequateSub: return "NotAdequateSub";
      case ErrorCode::NotStarSub: return "NotStarSub";
      case ErrorCode::NoDecomposition: return "NoDecomposition";
      case ErrorCode::AmbiguousDecomposition: return "AmbiguousDecomposition";
      case ErrorCode::NotRegular: return "NotRegular";
      case ErrorCode::NotAdmissible: return "NotAdmissible";
      case ErrorCode::NotQuasiIdeal: return "NotQuasiIdeal";
      case ErrorCode::InvariantBroken: return "InvariantBroken";
      case ErrorCode::AxiomViolation: return "AxiomViolation";
      case ErrorCode::PostconditionFailed: return "PostconditionFailed";
      case ErrorCode::BandNotNormal: return "BandNotNormal";
      case ErrorCode::TransversalInvalid: return "TransversalInvalid";
      case ErrorCode::TransversalMismatch: return "TransversalMismatch";
      case ErrorCode::ActionLawViolation: return "ActionLawViolation";
      case ErrorCode::ConditionViolation: return "ConditionViolation";
      case ErrorCode::IsoFailed: return "IsoFailed";
      case ErrorCode::SchemaError: return "SchemaError";
      case ErrorCode::UnknownKey: return "UnknownKey";
      case ErrorCode::ParamOutOfRange: return "ParamOutOfRange";
    }
    return "Unknown";
  }

  Error::Error(ErrorCode                code,
               std::string const&       detail,
               std::vector<std::size_t> witness)
      : std::runtime_error(std::string(to_string(code)) + ": " + detail),
        _code(code),
        _witness(std::move(witness)) {}

  void invariant_broken(std::string const& what) {
    throw Error(ErrorCode::InvariantBroken, what);
  }

}  // namespace sgt
