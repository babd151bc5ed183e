#ifndef SGT_DECOMPOSER_HPP_
#define SGT_DECOMPOSER_HPP_

#include <map>       // for map
#include <optional>  // for optional

#include "sgt/constructions.hpp"
#include "sgt/report.hpp"
#include "sgt/semigroup.hpp"
#include "sgt/transversal.hpp"

namespace sgt {

  //! The data of the general theorem read off a semigroup with an
  //! admissible transversal, together with the embeddings of I, Lambda and
  //! S0 into S.
  //!
  //! alpha_{x,y}(a, b) = e_{xaby} and beta_{x,y}(a, b) = f_{xaby}, on the
  //! rectangles R_{x*} x L_{y+} only.
  struct ExtractedStructure {
    StructureInput input;
    Restriction    s0;
    Restriction    i_set;
    Restriction    lambda_set;
  };

  //! Throws NotQuasiAdequate or NotAdmissible.
  ExtractedStructure extract_structure(FiniteSemigroup const&          s,
                                       TransversalDecomposition const& d);

  struct ExtractedAction {
    ActionTable table;
    Restriction s0;
    Restriction i_set;
  };

  //! x * e = e_{xe}.  Independence from the witness y with e in L_{y+} is
  //! asserted for every y.  Throws NotLeftAdequate, NotQuasiAdequate,
  //! NotAdmissible or NotLeftAmple.
  ExtractedAction extract_action(FiniteSemigroup const&          s,
                                 TransversalDecomposition const& d);

  struct SpinedFactors {
    Restriction                l_part;  // {x : f_x = f_xbar}
    Restriction                r_part;  // {x : e_x = e_xbar}
    SpinedFactor               l;
    SpinedFactor               r;
    std::map<Element, Element> identification;  // S0 in l -> S0 in r
  };

  //! Throws NotQuasiAdequate, NotQuasiIdeal or NotAdmissible.
  SpinedFactors extract_spined_factors(FiniteSemigroup const&          s,
                                       TransversalDecomposition const& d);

  struct RoundtripReport {
    BuiltSemigroup                rebuilt;
    ElementMap                    iso;  // x -> (e_x, xbar, f_x)
    std::optional<BuiltSemigroup> semidirect;
    std::optional<BuiltSemigroup> spined;
    std::optional<BuiltSemigroup> quasi_ideal;
    Report                        checks;
  };

  //! Extraction, rebuild and isomorphism check for the general theorem, and
  //! additionally the semidirect roundtrip (left adequate S with left ample
  //! S0) and the spined roundtrip (quasi-ideal S0).  Throws NotAdmissible,
  //! the errors of the sub-operations, or IsoFailed (witness: the pair of
  //! elements whose product is not preserved, or a colliding pair).
  RoundtripReport roundtrip(FiniteSemigroup const&          s,
                            TransversalDecomposition const& d);

}  // namespace sgt

#endif  // SGT_DECOMPOSER_HPP_
