#ifndef SGT_CENSUS_HPP_
#define SGT_CENSUS_HPP_

#include <cstddef>  // for size_t
#include <vector>   // for vector

#include "sgt/semigroup.hpp"

namespace sgt {

  //! The default cap on the order of exhaustive enumeration, and the hard
  //! cap a caller may raise it to.
  inline constexpr std::size_t census_default_cap = 4;
  inline constexpr std::size_t census_hard_cap    = 5;

  //! The table of s relabelled by the least permutation giving the
  //! lexicographically least row-major table.
  FiniteSemigroup canonical_form(FiniteSemigroup const& s);

  //! Every semigroup on {0, ..., n - 1}; with up_to_iso one canonical form
  //! per isomorphism class, in increasing order of table.
  //!
  //! Throws OrderCapExceeded when n > max_order or n > census_hard_cap.
  //! Above census_default_cap a warning is written to standard error.
  std::vector<FiniteSemigroup> enumerate_semigroups(
      std::size_t n,
      bool        up_to_iso,
      std::size_t max_order = census_default_cap);

  struct CensusSummary {
    std::size_t order                  = 0;
    std::size_t total                  = 0;
    std::size_t abundant               = 0;
    std::size_t adequate               = 0;
    std::size_t quasi_adequate         = 0;
    std::size_t with_transversal       = 0;
    std::size_t with_admissible        = 0;
  };

  CensusSummary tabulate(std::size_t                         order,
                         std::vector<FiniteSemigroup> const& semigroups,
                         Limits const&                       limits = {});

}  // namespace sgt

#endif  // SGT_CENSUS_HPP_
