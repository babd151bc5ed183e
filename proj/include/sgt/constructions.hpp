#ifndef SGT_CONSTRUCTIONS_HPP_
#define SGT_CONSTRUCTIONS_HPP_

#include <map>       // for map
#include <optional>  // for optional
#include <utility>   // for pair
#include <vector>    // for vector

#include "sgt/green.hpp"
#include "sgt/report.hpp"
#include "sgt/semigroup.hpp"
#include "sgt/transversal.hpp"

namespace sgt {

  using ElementPair = std::pair<Element, Element>;

  //! One structure map: (f, g) -> value.
  using PairMap = std::map<ElementPair, Element>;

  //! A family of structure maps indexed by (x, y) in S0 x S0.
  using MapFamily = std::map<ElementPair, PairMap>;

  //! The data shared by every builder: an adequate S0, a left regular band I
  //! and a right regular band Lambda, and the embeddings of E(S0) into both.
  //!
  //! Embeddings are keyed by the idempotents of s0.
  struct StructureSkeleton {
    FiniteSemigroup            s0;
    FiniteSemigroup            i_band;
    FiniteSemigroup            lambda_band;
    std::map<Element, Element> e0_in_i;
    std::map<Element, Element> e0_in_lambda;
  };

  //! Skeleton plus alpha and beta.  alpha.at({x, y}) is defined on
  //! R_{x*} x L_{y+} with values in L_{(xy)+} of I; beta has the same domain
  //! and values in R_{(xy)*} of Lambda.  The first key of each inner pair is
  //! an element of Lambda, the second one of I.
  struct StructureInput {
    StructureSkeleton skeleton;
    MapFamily         alpha;
    MapFamily         beta;
  };

  //! Quantities derived from a skeleton that every builder needs.
  struct StructureFrame {
    StarPlusMaps            sp;           // on s0
    ElementSet              e0;           // E(s0)
    std::vector<ElementSet> l_plus;       // L_{x+} in I, for each x in s0
    std::vector<ElementSet> r_star;       // R_{x*} in Lambda
    ElementMap              i_root;       // e in I -> the e0 in E(s0) with e L e0
    ElementMap              lambda_root;  // f in Lambda -> the f0 with f R f0
    ElementMap              to_i;         // e0 in E(s0) -> I, |I| elsewhere
    ElementMap              to_lambda;    // e0 in E(s0) -> Lambda
  };

  //! The L-class (respectively R-class) of e in a band.
  ElementSet band_l_class(FiniteSemigroup const& band, Element e);
  ElementSet band_r_class(FiniteSemigroup const& band, Element e);

  //! The prerequisites on the skeleton alone, one report entry each.
  Report check_skeleton(StructureSkeleton const& sk);

  //! Throws NotAdequate, NotABand or TransversalInvalid when check_skeleton
  //! would fail.
  StructureFrame make_frame(StructureSkeleton const& sk);

  //! alpha = (xy)+ and beta = (xy)* on every rectangle.
  StructureInput canonical_structure_input(StructureSkeleton const& sk);

  //! Report entries: the skeleton prerequisites, maps_well_formed and
  //! condition_1 to condition_5, each with a witness on failure.
  //!
  //! Witness layouts: condition_1 x, y, z, f, g, h, k, side (0 for alpha, 1
  //! for beta); condition_2 x, y; condition_3 x, x1, x2, e1, f1, e2, f2, e;
  //! condition_4 x, x1, x2, e1, f1, e2, f2, f; condition_5 f, e, side.
  Report validate_structure_input(StructureInput const& in);

  //! True iff every entry of validate_structure_input except condition_5
  //! passes.
  bool structure_axioms_hold(Report const& r);

  enum class BuildKind { General, QuasiIdeal, Spined, Semidirect };

  char const* to_string(BuildKind k);

  struct BuiltSemigroup {
    BuildKind                         kind = BuildKind::General;
    FiniteSemigroup                   w;
    std::vector<std::vector<Element>> legend;  // (e,x,f), (x,a) or (e,x)
    ElementSet                        w0;
    TransversalDecomposition          decomposition;
    FiniteSemigroup                   s0;
    ElementMap                        s0_embedding;  // s0 -> w0
    Report                            checks;        // postconditions

    std::optional<Element> index_of(std::vector<Element> const& tuple) const;
  };

  //! Throws AxiomViolation when the prerequisites, maps_well_formed or one
  //! of conditions (1)-(4) fail, and PostconditionFailed when the product is
  //! not a semigroup of the advertised kind.  Elements are ordered
  //! lexicographically by (x, e, f).
  BuiltSemigroup build_w(StructureInput const& in);

  //! The product (e(xy)+, xy, (xy)*h), cross-checked pointwise against
  //! build_w on the canonical input.  Throws BandNotNormal or
  //! TransversalInvalid.
  BuiltSemigroup build_quasi_ideal_w(StructureSkeleton const& sk);

  struct SpinedFactor {
    FiniteSemigroup semigroup;
    ElementSet      s0;
  };

  //! {(x, a) : xbar matches abar} with (x, a)(y, b) = (x ybar, abar b).
  //!
  //! `identification` maps the transversal of l to that of r; when absent the
  //! least isomorphism is used.  Throws NotLeftAdequate, NotRightAdequate,
  //! NotQuasiIdeal or TransversalMismatch.
  BuiltSemigroup build_spined_product(
      SpinedFactor const&                              l,
      SpinedFactor const&                              r,
      std::optional<std::map<Element, Element>> const& identification = {});

  //! A left action of an adequate S0 on a left regular band I.
  struct ActionTable {
    FiniteSemigroup                   s0;
    FiniteSemigroup                   i_band;
    std::map<Element, Element>        e0_in_i;
    std::vector<std::vector<Element>> act;  // act[x][e] = x * e
  };

  //! Report entries: prerequisites.*, action_total, action.composition,
  //! action.distributive, condition_1, condition_2 and condition_3.
  Report validate_action_table(ActionTable const& in);

  //! The same data in the form of the general theorem: Lambda = E(S0),
  //! alpha(x*, e) = x * e and beta = (xy)*.
  StructureInput structure_input_from_action(ActionTable const& in);

  //! {(e, x) : e in L_{x+}} inside I * S0, ordered by (x, e).  Throws
  //! NotLeftAmple, ActionLawViolation (witness: law, x, y, e[, f]) or
  //! ConditionViolation (witness: the condition number then the failing
  //! tuple).
  BuiltSemigroup build_semidirect(ActionTable const& in);

  //! With S0 inverse: W orthodox (left inverse for the semidirect builder)
  //! and W0 an inverse transversal.  Also checks W orthodox iff S0 inverse.
  Report check_inverse_specialization(BuiltSemigroup const& b);

}  // namespace sgt

#endif  // SGT_CONSTRUCTIONS_HPP_
