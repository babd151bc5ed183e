#ifndef SGT_GREEN_HPP_
#define SGT_GREEN_HPP_

#include <optional>  // for optional
#include <utility>   // for pair
#include <vector>    // for vector

#include "sgt/semigroup.hpp"

namespace sgt {

  //! The starred Green's relations.
  //!
  //! a R* b iff for all x, y in S^1, xa = ya <=> xb = yb; L* is the dual
  //! with multiplication on the right, and H* = R* meet L*.
  struct StarRelations {
    Partition rstar;
    Partition lstar;
    Partition hstar;
  };

  StarRelations star_relations(FiniteSemigroup const& s);

  //! Green's relations from principal ideals of S^1; D is the join of R and
  //! L.
  struct GreenRelations {
    Partition r;
    Partition l;
    Partition h;
    Partition d;
    Partition j;
  };

  GreenRelations green_relations(FiniteSemigroup const& s);

  struct Regularity {
    ElementSet              regular;
    std::vector<ElementSet> inverses;  // V(x) for every x

    bool is_regular(Element x) const noexcept {
      return !inverses[x].empty();
    }
  };

  Regularity regular_and_inverses(FiniteSemigroup const& s);

  //! Classification flags from abundant through bountiful.
  //!
  //! `is_left_ample` is meaningful only when `left_ample_applicable`, i.e.
  //! when S is left adequate.  The idempotent witnesses list, per element,
  //! every idempotent of its R*-class and of its L*-class.
  struct AbundanceProfile {
    bool is_abundant             = false;
    bool is_adequate             = false;
    bool is_left_adequate        = false;
    bool is_right_adequate       = false;
    bool is_quasi_adequate       = false;
    bool left_ample_applicable   = false;
    bool is_left_ample           = false;
    bool is_idempotent_connected = false;
    bool is_bountiful            = false;
    bool is_regular              = false;
    bool is_orthodox             = false;
    bool is_inverse              = false;

    std::vector<ElementSet> rstar_idempotents;
    std::vector<ElementSet> lstar_idempotents;
  };

  AbundanceProfile abundance_profile(FiniteSemigroup const& s);

  // Cheaper single-flag tests used in inner loops.
  bool is_abundant(FiniteSemigroup const& s);
  bool is_adequate(FiniteSemigroup const& s);
  bool is_quasi_adequate(FiniteSemigroup const& s);

  //! a ↦ a* (the idempotent of L*_a) and a ↦ a+ (the idempotent of R*_a).
  struct StarPlusMaps {
    ElementMap star;
    ElementMap plus;
  };

  //! Throws NotAdequate.  The identities (ab)* = (a*b)* and (ab)+ = (ab+)+
  //! are verified for all pairs.
  StarPlusMaps star_plus(FiniteSemigroup const& s);

  struct DeltaResult {
    //! related[a][b] iff b = e a f for idempotents e in the J-class of a+ and
    //! f in the J-class of a* within the band E(S).
    std::vector<std::vector<char>>     related;
    std::vector<std::pair<Element, Element>> pairs;
    bool                               is_equivalence = false;
    bool                               is_congruence  = false;
    std::optional<Partition>           partition;
    std::optional<Quotient>            quotient;
  };

  //! Throws NotQuasiAdequate.
  DeltaResult delta(FiniteSemigroup const& s);

  //! Whether phi preserves R* and L* (forwards).  Throws NotAMorphism.
  bool is_admissible(FiniteSemigroup const& s,
                     FiniteSemigroup const& t,
                     ElementMap const&      phi);

  //! The least congruence rho with S/rho adequate and rho^natural
  //! admissible.  Throws NotQuasiAdequate, OrderCapExceeded or NoMinimum.
  Partition min_adequate_admissible_congruence(FiniteSemigroup const& s,
                                               Limits const& limits = {});

}  // namespace sgt

#endif  // SGT_GREEN_HPP_
