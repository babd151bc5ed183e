#include "sgt/census.hpp"

#include <algorithm>  // for next_permutation
#include <iostream>   // for cerr
#include <numeric>    // for iota
#include <set>        // for set

#include "sgt/error.hpp"
#include "sgt/green.hpp"
#include "sgt/transversal.hpp"

namespace sgt {

  namespace {
    constexpr Element unset = static_cast<Element>(-1);

    class Search {
     public:
      explicit Search(std::size_t n) : _n(n), _t(n * n, unset) {}

      template <typename Emit>
      void run(Emit&& emit) {
        fill(0, emit);
      }

     private:
      Element at(Element a, Element b) const {
        return _t[a * _n + b];
      }

      bool triple_ok(Element a, Element b, Element c) const {
        Element const ab = at(a, b), bc = at(b, c);
        if (ab == unset || bc == unset) {
          return true;
        }
        Element const l = at(ab, c), r = at(a, bc);
        return l == unset || r == unset || l == r;
      }

      // Every triple whose evaluation reads the cell (x, y).
      bool consistent(Element x, Element y) const {
        for (Element c = 0; c < _n; ++c) {
          if (!triple_ok(x, y, c) || !triple_ok(c, x, y)) {
            return false;
          }
        }
        for (Element a = 0; a < _n; ++a) {
          for (Element b = 0; b < _n; ++b) {
            if ((at(a, b) == x && !triple_ok(a, b, y))
                || (at(a, b) == y && !triple_ok(x, a, b))) {
              return false;
            }
          }
        }
        return true;
      }

      template <typename Emit>
      void fill(std::size_t cell, Emit& emit) {
        if (cell == _t.size()) {
          emit(_t);
          return;
        }
        Element const x = cell / _n, y = cell % _n;
        for (Element v = 0; v < _n; ++v) {
          _t[cell] = v;
          if (consistent(x, y)) {
            fill(cell + 1, emit);
          }
        }
        _t[cell] = unset;
      }

      std::size_t          _n;
      std::vector<Element> _t;
    };

    std::vector<Element> canonical_flat(std::vector<Element> const& t,
                                        std::size_t                 n) {
      std::vector<Element> perm(n), best, cur(n * n);
      std::iota(perm.begin(), perm.end(), Element{0});
      do {
        // perm maps old labels to new ones
        for (Element a = 0; a < n; ++a) {
          for (Element b = 0; b < n; ++b) {
            cur[perm[a] * n + perm[b]] = perm[t[a * n + b]];
          }
        }
        if (best.empty() || cur < best) {
          best = cur;
        }
      } while (std::next_permutation(perm.begin(), perm.end()));
      return best;
    }

    FiniteSemigroup from_flat(std::vector<Element> const& t, std::size_t n) {
      std::vector<std::vector<Element>> rows(n);
      for (Element a = 0; a < n; ++a) {
        rows[a].assign(t.begin() + a * n, t.begin() + (a + 1) * n);
      }
      return validate_table(rows);
    }
  }  // namespace

  FiniteSemigroup canonical_form(FiniteSemigroup const& s) {
    return from_flat(canonical_flat(s.flat_table(), s.size()), s.size());
  }

  std::vector<FiniteSemigroup>
  enumerate_semigroups(std::size_t n, bool up_to_iso, std::size_t max_order) {
    if (n > max_order || n > census_hard_cap) {
      throw Error(ErrorCode::OrderCapExceeded,
                  "census of order " + std::to_string(n) + " exceeds the cap "
                      + std::to_string(std::min(max_order, census_hard_cap)));
    }
    if (n > census_default_cap) {
      std::cerr << "warning: exhaustive census of order " << n
                << " is slow\n";
    }
    std::vector<FiniteSemigroup> out;
    if (n == 0) {
      return out;
    }
    std::set<std::vector<Element>> classes;
    Search                         search(n);
    search.run([&](std::vector<Element> const& t) {
      if (up_to_iso) {
        classes.insert(canonical_flat(t, n));
      } else {
        out.push_back(from_flat(t, n));
      }
    });
    for (auto const& t : classes) {
      out.push_back(from_flat(t, n));
    }
    return out;
  }

  CensusSummary tabulate(std::size_t                         order,
                         std::vector<FiniteSemigroup> const& semigroups,
                         Limits const&                       limits) {
    CensusSummary c;
    c.order = order;
    for (auto const& s : semigroups) {
      ++c.total;
      if (!is_abundant(s)) {
        continue;
      }
      ++c.abundant;
      c.adequate += is_adequate(s);
      c.quasi_adequate += is_quasi_adequate(s);
      auto const ts = find_adequate_transversals(s, limits);
      if (!ts.empty()) {
        ++c.with_transversal;
      }
      for (auto const& d : ts) {
        if (transversal_profile(s, d).is_admissible) {
          ++c.with_admissible;
          break;
        }
      }
    }
    return c;
  }

}  // namespace sgt
