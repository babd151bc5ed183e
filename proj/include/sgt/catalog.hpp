#ifndef SGT_CATALOG_HPP_
#define SGT_CATALOG_HPP_

#include <string>  // for string
#include <vector>  // for vector

#include "sgt/semigroup.hpp"

namespace sgt {

  //! A family name with integer parameters, written `family` or
  //! `family(p1,p2)`.
  struct CatalogKey {
    std::string              family;
    std::vector<std::size_t> params;

    std::string to_string() const;
  };

  //! Throws UnknownKey on a malformed key.
  CatalogKey parse_catalog_key(std::string const& text);

  //! The families, with their parameter lists, in a fixed order:
  //! chain(n), left_zero(n), right_zero(n), rect_band(m,n), cyclic_group(n),
  //! null(n), brandt2, sym_inv(n), lrb3.
  std::vector<std::string> catalog_families();

  //! The named semigroup.  Its documented classification is re-checked on
  //! construction.  Throws UnknownKey or ParamOutOfRange.
  FiniteSemigroup catalog(CatalogKey const& key);
  FiniteSemigroup catalog(std::string const& key);

}  // namespace sgt

#endif  // SGT_CATALOG_HPP_
