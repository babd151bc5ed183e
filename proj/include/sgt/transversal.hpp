#ifndef SGT_TRANSVERSAL_HPP_
#define SGT_TRANSVERSAL_HPP_

#include <optional>  // for optional
#include <vector>    // for vector

#include "sgt/report.hpp"
#include "sgt/semigroup.hpp"

namespace sgt {

  //! An adequate transversal S0 of S together with the factorisation
  //! x = e_x xbar f_x and the sets derived from it.
  //!
  //! All maps are indexed by the elements of S.  `plus0` and `star0` hold
  //! x+ and x* (computed in S0) for x in S0 and |S| elsewhere.
  struct TransversalDecomposition {
    ElementSet s0;
    ElementMap e_of;
    ElementMap bar_of;
    ElementMap f_of;
    ElementMap plus0;
    ElementMap star0;
    ElementSet e0;          // E(S0)
    ElementSet i_set;       // {e_x}
    ElementSet lambda_set;  // {f_x}
    ElementSet r_set;       // {x : e_x = e_xbar}
    ElementSet l_set;       // {x : f_x = f_xbar}
    std::vector<std::optional<Element>> inv0;  // x0 on regular x

    bool in_s0(Element x) const;
  };

  //! True iff every a in U has idempotents of U in L*_a(S) and R*_a(S).
  //! Throws NotClosed.
  bool is_star_subsemigroup(FiniteSemigroup const& s, ElementSet const& u);

  //! Checks every condition of an adequate transversal, finding the triples
  //! (e, xbar, f) by exhaustive search.
  //!
  //! Throws NotAbundant, NotClosed, NotAdequateSub, NotStarSub,
  //! NoDecomposition (witness: x) or AmbiguousDecomposition (witness: x
  //! followed by the candidate triples).  Failure of a property the theory
  //! guarantees for a verified transversal throws InvariantBroken.
  TransversalDecomposition verify_adequate_transversal(FiniteSemigroup const& s,
                                                       ElementSet const& s0);

  //! Every subsemigroup that is an adequate transversal, in the order of
  //! enumerate_subsemigroups.  Empty when S is not abundant.
  std::vector<TransversalDecomposition>
  find_adequate_transversals(FiniteSemigroup const& s, Limits const& limits = {});

  struct TransversalProfile {
    bool   is_quasi_ideal    = false;
    bool   is_multiplicative = false;
    bool   is_admissible     = false;
    Report details;  // one entry per defining condition, with witnesses
  };

  //! quasi-ideal: S0 S S0 in S0 (cross-checked against Lambda I in S0 and
  //! R L in S0); multiplicative: Lambda I in E(S0); admissible: the bar map
  //! is a morphism.
  TransversalProfile transversal_profile(FiniteSemigroup const&          s,
                                         TransversalDecomposition const& d);

  //! The unique y in V(x) with xy = e_x and yx = f_x.  Throws NotRegular.
  Element canonical_inverse(FiniteSemigroup const&          s,
                            TransversalDecomposition const& d,
                            Element                         x);

  //! Evaluates the identities that hold for adequate transversals (and the
  //! stronger ones for quasi-adequate, quasi-ideal and admissible cases).
  //! Never throws on a failed identity; failures are report entries.
  Report audit_identities(FiniteSemigroup const&          s,
                          TransversalDecomposition const& d);

}  // namespace sgt

#endif  // SGT_TRANSVERSAL_HPP_
