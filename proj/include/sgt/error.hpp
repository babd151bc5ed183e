#ifndef SGT_ERROR_HPP_
#define SGT_ERROR_HPP_

#include <cstddef>    // for size_t
#include <stdexcept>  // for runtime_error
#include <string>     // for string
#include <vector>     // for vector

namespace sgt {

  enum class ErrorCode {
    NonSquare,
    OutOfRange,
    NotAssociative,
    OrderCapExceeded,
    NotACongruence,
    NotABand,
    NotAMorphism,
    NotClosed,
    NotAbundant,
    NotAdequate,
    NotQuasiAdequate,
    NotLeftAdequate,
    NotRightAdequate,
    NotLeftAmple,
    NoMinimum,
    NotAdequateSub,
    NotStarSub,
    NoDecomposition,
    AmbiguousDecomposition,
    NotRegular,
    NotAdmissible,
    NotQuasiIdeal,
    InvariantBroken,
    AxiomViolation,
    PostconditionFailed,
    BandNotNormal,
    TransversalInvalid,
    TransversalMismatch,
    ActionLawViolation,
    ConditionViolation,
    IsoFailed,
    SchemaError,
    UnknownKey,
    ParamOutOfRange
  };

  char const* to_string(ErrorCode code) noexcept;

  //! The single exception type thrown by the library.
  //!
  //! The witness holds element indices (or other small integers) whose
  //! meaning depends on the code, e.g. the triple (a, b, c) for
  //! NotAssociative or x followed by the flattened candidate triples for
  //! AmbiguousDecomposition.
  class Error : public std::runtime_error {
   public:
    Error(ErrorCode code,
          std::string const& detail,
          std::vector<std::size_t> witness = {});

    ErrorCode code() const noexcept {
      return _code;
    }

    std::vector<std::size_t> const& witness() const noexcept {
      return _witness;
    }

   private:
    ErrorCode                _code;
    std::vector<std::size_t> _witness;
  };

  // Raised when something the theory guarantees turns out false.
  [[noreturn]] void invariant_broken(std::string const& what);

}  // namespace sgt

#endif  // SGT_ERROR_HPP_
