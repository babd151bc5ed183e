#include "sgt/transversal.hpp"

#include <algorithm>  // for binary_search, sort, unique
#include <sstream>    // for ostringstream

#include "sgt/error.hpp"
#include "sgt/green.hpp"

namespace sgt {

  namespace {
    using Witness = std::optional<std::vector<std::size_t>>;

    bool contains(ElementSet const& set, Element x) {
      return std::binary_search(set.begin(), set.end(), x);
    }

    ElementSet sorted_unique(ElementSet v) {
      std::sort(v.begin(), v.end());
      v.erase(std::unique(v.begin(), v.end()), v.end());
      return v;
    }

    std::string join(std::vector<std::size_t> const& w) {
      std::ostringstream os;
      for (std::size_t i = 0; i < w.size(); ++i) {
        os << (i == 0 ? "" : ",") << w[i];
      }
      return os.str();
    }

    void record(Report& r, std::string name, Witness const& w) {
      if (w) {
        r.fail(std::move(name), "witness " + join(*w), *w);
      } else {
        r.add(std::move(name));
      }
    }

    // The first x in `range` for which ok(x) is false.
    template <typename Range, typename Pred>
    Witness first_failure(Range const& range, Pred ok) {
      for (Element x : range) {
        if (!ok(x)) {
          return std::vector<std::size_t>{x};
        }
      }
      return std::nullopt;
    }

    template <typename Range1, typename Range2, typename Pred>
    Witness first_failure(Range1 const& r1, Range2 const& r2, Pred ok) {
      for (Element x : r1) {
        for (Element y : r2) {
          if (!ok(x, y)) {
            return std::vector<std::size_t>{x, y};
          }
        }
      }
      return std::nullopt;
    }

    ElementSet all_elements(std::size_t n) {
      ElementSet out(n);
      for (Element a = 0; a < n; ++a) {
        out[a] = a;
      }
      return out;
    }

    ElementSet products(FiniteSemigroup const& s,
                        ElementSet const&      a,
                        ElementSet const&      b) {
      ElementSet out;
      for (Element x : a) {
        for (Element y : b) {
          out.push_back(s(x, y));
        }
      }
      return sorted_unique(out);
    }

    bool subset(ElementSet const& a, ElementSet const& b) {
      return std::includes(b.begin(), b.end(), a.begin(), a.end());
    }

    void assert_invariants(FiniteSemigroup const&          s,
                           TransversalDecomposition const& d,
                           StarRelations const&            star,
                           Regularity const&               reg) {
      std::size_t const n = s.size();
      for (Element x = 0; x < n; ++x) {
        if (s(s(d.e_of[x], d.bar_of[x]), d.f_of[x]) != x) {
          invariant_broken("x = e_x xbar f_x fails at " + std::to_string(x));
        }
        if (!star.rstar.same(d.e_of[x], x) || !star.lstar.same(d.f_of[x], x)) {
          invariant_broken("e_x R* x and f_x L* x fail at "
                           + std::to_string(x));
        }
        if (d.in_s0(x)
            && (d.e_of[x] != d.plus0[x] || d.bar_of[x] != x
                || d.f_of[x] != d.star0[x])) {
          invariant_broken("S0 element " + std::to_string(x)
                           + " does not factor as x+ x x*");
        }
        std::size_t in_i = 0, in_lambda = 0;
        for (Element e : d.i_set) {
          in_i += star.rstar.same(e, x);
        }
        for (Element f : d.lambda_set) {
          in_lambda += star.lstar.same(f, x);
        }
        if (in_i != 1 || in_lambda != 1) {
          invariant_broken("|R*_x meet I| = |L*_x meet Lambda| = 1 fails at "
                           + std::to_string(x));
        }
        if (reg.is_regular(x)) {
          std::size_t count = 0;
          for (Element y : reg.inverses[x]) {
            count += d.in_s0(y);
          }
          if (count != 1 || !d.inv0[x] || !d.in_s0(*d.inv0[x])) {
            invariant_broken("|V(x) meet S0| = 1 with x0 in S0 fails at "
                             + std::to_string(x));
          }
        }
      }
    }
  }  // namespace

  bool TransversalDecomposition::in_s0(Element x) const {
    return contains(s0, x);
  }

  bool is_star_subsemigroup(FiniteSemigroup const& s, ElementSet const& u) {
    if (!is_closed(s, u)) {
      throw Error(ErrorCode::NotClosed, "subset is not a subsemigroup");
    }
    auto const star = star_relations(s);
    for (Element a : u) {
      bool has_l = false, has_r = false;
      for (Element e : u) {
        if (s.is_idempotent(e)) {
          has_l = has_l || star.lstar.same(a, e);
          has_r = has_r || star.rstar.same(a, e);
        }
      }
      if (!has_l || !has_r) {
        return false;
      }
    }
    return true;
  }

  TransversalDecomposition verify_adequate_transversal(FiniteSemigroup const& s,
                                                       ElementSet const& s0) {
    std::size_t const n = s.size();
    if (!is_abundant(s)) {
      throw Error(ErrorCode::NotAbundant, "the semigroup is not abundant");
    }
    TransversalDecomposition d;
    d.s0 = sorted_unique(s0);
    if (d.s0.empty() || d.s0.back() >= n || !is_closed(s, d.s0)) {
      throw Error(ErrorCode::NotClosed, "S0 is not a subsemigroup");
    }
    auto const sub = restrict_to(s, d.s0);
    if (!is_adequate(sub.semigroup)) {
      throw Error(ErrorCode::NotAdequateSub, "S0 is not adequate");
    }
    if (!is_star_subsemigroup(s, d.s0)) {
      throw Error(ErrorCode::NotStarSub, "S0 is not a *-subsemigroup");
    }
    auto const sp = star_plus(sub.semigroup);
    d.plus0.assign(n, n);
    d.star0.assign(n, n);
    for (Element x : d.s0) {
      d.plus0[x] = sub.to_parent[sp.plus[sub.local(x)]];
      d.star0[x] = sub.to_parent[sp.star[sub.local(x)]];
    }

    auto const green = green_relations(s);
    auto const idem  = s.idempotents();
    d.e_of.assign(n, n);
    d.bar_of.assign(n, n);
    d.f_of.assign(n, n);
    for (Element x = 0; x < n; ++x) {
      std::vector<std::size_t> triples;
      for (Element t : d.s0) {
        for (Element e : idem) {
          if (!green.l.same(e, d.plus0[t])) {
            continue;
          }
          Element et = s(e, t);
          for (Element f : idem) {
            if (green.r.same(f, d.star0[t]) && s(et, f) == x) {
              triples.insert(triples.end(), {e, t, f});
            }
          }
        }
      }
      if (triples.empty()) {
        throw Error(ErrorCode::NoDecomposition,
                    "no factorisation e xbar f of " + std::to_string(x),
                    {x});
      }
      if (triples.size() > 3) {
        std::vector<std::size_t> w{x};
        w.insert(w.end(), triples.begin(), triples.end());
        throw Error(ErrorCode::AmbiguousDecomposition,
                    std::to_string(triples.size() / 3)
                        + " factorisations of " + std::to_string(x) + ": "
                        + join(triples),
                    w);
      }
      d.e_of[x]   = triples[0];
      d.bar_of[x] = triples[1];
      d.f_of[x]   = triples[2];
    }

    for (Element x : d.s0) {
      if (s.is_idempotent(x)) {
        d.e0.push_back(x);
      }
    }
    d.i_set      = sorted_unique(d.e_of);
    d.lambda_set = sorted_unique(d.f_of);
    for (Element x = 0; x < n; ++x) {
      if (d.e_of[x] == d.e_of[d.bar_of[x]]) {
        d.r_set.push_back(x);
      }
      if (d.f_of[x] == d.f_of[d.bar_of[x]]) {
        d.l_set.push_back(x);
      }
    }

    auto const reg = regular_and_inverses(s);
    d.inv0.assign(n, std::nullopt);
    for (Element x : reg.regular) {
      for (Element y : reg.inverses[x]) {
        if (s(x, y) == d.e_of[x] && s(y, x) == d.f_of[x]) {
          if (d.inv0[x]) {
            invariant_broken("two inverses y of " + std::to_string(x)
                             + " with xy = e_x and yx = f_x");
          }
          d.inv0[x] = y;
        }
      }
      if (!d.inv0[x]) {
        invariant_broken("no inverse y of " + std::to_string(x)
                         + " with xy = e_x and yx = f_x");
      }
    }
    assert_invariants(s, d, star_relations(s), reg);
    return d;
  }

  std::vector<TransversalDecomposition>
  find_adequate_transversals(FiniteSemigroup const& s, Limits const& limits) {
    auto const                            subs = enumerate_subsemigroups(s, limits);
    std::vector<TransversalDecomposition> out;
    if (!is_abundant(s)) {
      return out;
    }
    for (auto const& u : subs) {
      try {
        out.push_back(verify_adequate_transversal(s, u));
      } catch (Error const& e) {
        if (e.code() == ErrorCode::InvariantBroken) {
          throw;
        }
      }
    }
    return out;
  }

  TransversalProfile transversal_profile(FiniteSemigroup const&          s,
                                         TransversalDecomposition const& d) {
    std::size_t const  n = s.size();
    auto const         all = all_elements(n);
    TransversalProfile p;

    auto const qi_a = [&]() -> Witness {
      for (Element a : d.s0) {
        for (Element x : all) {
          for (Element b : d.s0) {
            if (!d.in_s0(s(s(a, x), b))) {
              return std::vector<std::size_t>{a, x, b};
            }
          }
        }
      }
      return std::nullopt;
    }();
    auto const qi_b = first_failure(d.lambda_set, d.i_set, [&](auto l, auto i) {
      return d.in_s0(s(l, i));
    });
    auto const qi_c = first_failure(d.r_set, d.l_set, [&](auto r, auto l) {
      return d.in_s0(s(r, l));
    });
    record(p.details, "quasi_ideal.S0_S_S0", qi_a);
    record(p.details, "quasi_ideal.Lambda_I", qi_b);
    record(p.details, "quasi_ideal.R_L", qi_c);
    if (qi_a.has_value() != qi_b.has_value()
        || qi_a.has_value() != qi_c.has_value()) {
      invariant_broken("the three quasi-ideal conditions disagree");
    }
    p.is_quasi_ideal = !qi_a;

    auto const mult = first_failure(d.lambda_set, d.i_set, [&](auto l, auto i) {
      return contains(d.e0, s(l, i));
    });
    record(p.details, "multiplicative", mult);
    p.is_multiplicative = !mult;
    if (is_quasi_adequate(s) && p.is_multiplicative != p.is_quasi_ideal) {
      invariant_broken("multiplicative and quasi-ideal disagree on a "
                       "quasi-adequate semigroup");
    }

    auto const adm = first_failure(all, all, [&](auto x, auto y) {
      return d.bar_of[s(x, y)] == s(d.bar_of[x], d.bar_of[y]);
    });
    record(p.details, "admissible", adm);
    p.is_admissible = !adm;
    return p;
  }

  Element canonical_inverse(FiniteSemigroup const&          s,
                            TransversalDecomposition const& d,
                            Element                         x) {
    if (x >= s.size() || !d.inv0[x]) {
      throw Error(ErrorCode::NotRegular,
                  std::to_string(x) + " is not regular",
                  {x});
    }
    Element const x0 = *d.inv0[x];
    if (!d.in_s0(x0) || !d.inv0[x0] || !d.inv0[*d.inv0[x0]]) {
      invariant_broken("x0 outside S0 at " + std::to_string(x));
    }
    Element const x00 = *d.inv0[x0];
    if (d.bar_of[x] != x00 || *d.inv0[x00] != x0) {
      invariant_broken("xbar = x00 and x0 = x000 fail at "
                       + std::to_string(x));
    }
    return x0;
  }

  Report audit_identities(FiniteSemigroup const&          s,
                          TransversalDecomposition const& d) {
    std::size_t const n     = s.size();
    auto const        all   = all_elements(n);
    auto const        star  = star_relations(s);
    auto const        green = green_relations(s);
    auto const        reg   = regular_and_inverses(s);
    auto const        idem  = s.idempotents();
    bool const        qa    = is_quasi_adequate(s);
    auto const&       e     = d.e_of;
    auto const&       f     = d.f_of;
    auto const&       bar   = d.bar_of;
    auto              inv   = [&d](Element x) { return *d.inv0[x]; };
    bool const        t_closed = is_closed(s, reg.regular);
    Report            r;

    // basic factorisation properties
    record(r, "ef_lemma.1", first_failure(all, [&](auto x) {
             return star.rstar.same(e[x], x) && star.lstar.same(f[x], x);
           }));
    record(r, "ef_lemma.2", first_failure(d.s0, [&](auto x) {
             return e[x] == d.plus0[x] && contains(d.e0, e[x]) && bar[x] == x
                    && f[x] == d.star0[x] && contains(d.e0, f[x]);
           }));
    record(r, "ef_lemma.3", first_failure(d.e0, [&](auto x) {
             return e[x] == x && bar[x] == x && f[x] == x;
           }));
    record(r, "ef_lemma.4", first_failure(all, [&](auto x) {
             Element eb = e[bar[x]];
             return green.l.same(eb, e[x]) && s(eb, e[x]) == eb
                    && s(e[x], eb) == e[x];
           }));
    record(r, "ef_lemma.5", first_failure(all, [&](auto x) {
             Element fb = f[bar[x]];
             return green.r.same(fb, f[x]) && s(fb, f[x]) == f[x]
                    && s(f[x], fb) == fb;
           }));
    record(r, "rs_ls_lemma", first_failure(all, all, [&](auto x, auto y) {
             return star.rstar.same(x, y) == (e[x] == e[y])
                    && star.lstar.same(x, y) == (f[x] == f[y]);
           }));
    record(r, "i_lambda_factorisation", [&]() -> Witness {
      if (auto w = first_failure(d.i_set, [&](auto x) {
            return e[x] == x && bar[x] == f[x] && f[x] == e[bar[x]];
          })) {
        return w;
      }
      return first_failure(d.lambda_set, [&](auto y) {
        return e[y] == bar[y] && bar[y] == f[bar[y]] && f[y] == y;
      });
    }());
    record(r, "green_l_r_on_idempotents_match_band", [&]() -> Witness {
      // for idempotents e L f in S iff ef = e and fe = f
      return first_failure(idem, idem, [&](auto a, auto b) {
        return green.l.same(a, b) == (s(a, b) == a && s(b, a) == b)
               && green.r.same(a, b) == (s(a, b) == b && s(b, a) == a);
      });
    }());
    record(r, "regular_i_lambda", [&]() -> Witness {
      ElementSet i1, i2, l1, l2;
      for (Element x : reg.regular) {
        if (x == s(x, inv(x))) {
          i1.push_back(x);
        }
        if (x == s(inv(x), x)) {
          l1.push_back(x);
        }
        i2.push_back(s(x, inv(x)));
        l2.push_back(s(inv(x), x));
      }
      i1 = sorted_unique(i1), i2 = sorted_unique(i2);
      l1 = sorted_unique(l1), l2 = sorted_unique(l2);
      if (i1 != d.i_set || i2 != d.i_set || l1 != d.lambda_set
          || l2 != d.lambda_set) {
        return std::vector<std::size_t>{};
      }
      return std::nullopt;
    }());
    record(r, "regular_rstar_hstar", [&]() -> Witness {
      // x = aa0 iff a in R*_x meet Reg(S), for x in I
      if (auto w = first_failure(d.i_set, reg.regular, [&](auto x, auto a) {
            return (x == s(a, inv(a))) == star.rstar.same(a, x);
          })) {
        return w;
      }
      return first_failure(all, reg.regular, [&](auto x, auto a) {
        return (e[x] == s(a, inv(a)) && f[x] == s(inv(a), a))
               == star.hstar.same(a, x);
      });
    }());
    record(r, "r_l_characterisation", first_failure(all, [&](auto x) {
             return contains(d.r_set, x) == (x == s(bar[x], f[x]))
                    && contains(d.l_set, x) == (x == s(e[x], bar[x]));
           }));
    record(r, "bar_plus_lemma", [&]() -> Witness {
      for (Element x : d.s0) {
        for (Element a : d.lambda_set) {
          if (green.r.same(a, d.star0[x]) != (bar[a] == d.star0[x])) {
            return std::vector<std::size_t>{x, a};
          }
        }
        for (Element b : d.i_set) {
          if (green.l.same(b, d.plus0[x]) != (bar[b] == d.plus0[x])) {
            return std::vector<std::size_t>{x, b};
          }
        }
      }
      return std::nullopt;
    }());

    // regular elements forming a subsemigroup
    if (t_closed) {
      auto const& t = reg.regular;
      record(r, "subband.i_left_regular", [&]() -> Witness {
        if (!is_closed(s, d.i_set)) {
          return std::vector<std::size_t>{};
        }
        return first_failure(d.i_set, d.i_set, [&](auto x, auto y) {
          return s(s(x, y), x) == s(x, y);
        });
      }());
      record(r, "subband.lambda_right_regular", [&]() -> Witness {
        if (!is_closed(s, d.lambda_set)) {
          return std::vector<std::size_t>{};
        }
        return first_failure(d.lambda_set, d.lambda_set, [&](auto x, auto y) {
          return s(s(x, y), x) == s(y, x);
        });
      }());
      record(r, "subband.inverse_of_product", first_failure(t, t, [&](auto x, auto y) {
               Element xy   = s(x, y);
               Element want = inv(xy);
               return want == s(inv(s(s(inv(x), x), y)), inv(x))
                      && want == s(inv(y), inv(s(xy, inv(y))))
                      && want
                             == s(s(inv(y), inv(s(s(inv(x), xy), inv(y)))),
                                  inv(x));
             }));
      record(r, "subband.inverse_of_mixed", first_failure(t, t, [&](auto x, auto y) {
               return inv(s(x, inv(y))) == s(inv(inv(y)), inv(x))
                      && inv(s(inv(x), y)) == s(inv(y), inv(inv(x)));
             }));
    } else {
      r.not_applicable("subband", "Reg(S) is not a subsemigroup");
    }

    // bar is multiplicative on special pairs
    auto bar_mult = [&](auto x, auto y) {
      return bar[s(x, y)] == s(bar[x], bar[y]);
    };
    record(r, "bar_prop.lambda_i", first_failure(d.lambda_set, d.i_set, bar_mult));
    record(r, "bar_prop.l_r", first_failure(d.l_set, d.r_set, bar_mult));
    record(r, "bar_prop.s0_s0", first_failure(d.s0, d.s0, bar_mult));
    if (qa) {
      record(r, "bar_prop.regular", first_failure(reg.regular, reg.regular, bar_mult));
    } else {
      r.not_applicable("bar_prop.regular", "not quasi-adequate");
    }

    // the four equivalent conditions for quasi-adequacy
    {
      bool const c1 = qa;
      bool const c2 = !first_failure(reg.regular, reg.regular, [&](auto x, auto y) {
        return reg.is_regular(s(x, y)) && inv(s(x, y)) == s(inv(y), inv(x));
      });
      bool const c3 = !first_failure(d.i_set, d.lambda_set, [&](auto i, auto l) {
        Element li = s(l, i);
        return reg.is_regular(li) && inv(li) == s(inv(i), inv(l));
      });
      bool const c4 = products(s, d.i_set, d.lambda_set) == idem;
      std::string detail = std::string("(1)=") + (c1 ? "T" : "F") + " (2)="
                           + (c2 ? "T" : "F") + " (3)=" + (c3 ? "T" : "F")
                           + " (4)=" + (c4 ? "T" : "F");
      if (!qa) {
        r.not_applicable("qa_prop.all_or_none", "idempotents not closed; " + detail);
      } else if (c1 == c2 && c2 == c3 && c3 == c4) {
        r.add("qa_prop.all_or_none").detail = detail;
      } else {
        r.fail("qa_prop.all_or_none", detail);
      }
    }

    if (qa) {
      record(r, "e0_corollary", first_failure(idem, [&](auto x) {
               return contains(d.e0, inv(x));
             }));
      record(r, "e0_transversal.i_left_regular", first_failure(d.i_set, d.i_set, [&](auto x, auto y) {
               return contains(d.i_set, s(x, y)) && s(s(x, y), x) == s(x, y);
             }));
      record(r, "e0_transversal.lambda_right_regular",
             first_failure(d.lambda_set, d.lambda_set, [&](auto x, auto y) {
               return contains(d.lambda_set, s(x, y)) && s(s(x, y), x) == s(y, x);
             }));
      ElementSet i_or_lambda = d.i_set;
      i_or_lambda.insert(i_or_lambda.end(), d.lambda_set.begin(), d.lambda_set.end());
      i_or_lambda = sorted_unique(i_or_lambda);
      record(r, "e0_transversal.unique_inverse", first_failure(i_or_lambda, [&](auto x) {
               std::size_t count = 0;
               for (Element y : d.e0) {
                 count += std::binary_search(
                     reg.inverses[x].begin(), reg.inverses[x].end(), y);
               }
               return count == 1 && contains(d.e0, inv(x));
             }));
      record(r, "e0_transversal.fixed", first_failure(d.e0, [&](auto x) {
               return inv(x) == x;
             }));

      // L-classes of I over E0 (and dually R-classes of Lambda)
      auto l_class = [&](Element x) {
        ElementSet out;
        for (Element y : d.i_set) {
          if (s(x, y) == x && s(y, x) == y) {
            out.push_back(y);
          }
        }
        return out;
      };
      auto r_class = [&](Element x) {
        ElementSet out;
        for (Element y : d.lambda_set) {
          if (s(x, y) == y && s(y, x) == x) {
            out.push_back(y);
          }
        }
        return out;
      };
      record(r, "lx_lemma.left_zero", first_failure(d.e0, [&](auto x) {
               auto const lx = l_class(x);
               for (Element a : lx) {
                 for (Element b : lx) {
                   if (s(a, b) != a) {
                     return false;
                   }
                 }
               }
               return true;
             }));
      record(r, "lx_lemma.classes_by_inverse", first_failure(d.i_set, [&](auto y) {
               return l_class(y) == l_class(inv(y));
             }));
      record(r, "lx_lemma.product", first_failure(d.e0, d.e0, [&](auto x, auto y) {
               auto const target = l_class(s(y, x));
               return subset(products(s, l_class(y), l_class(x)), target);
             }));
      record(r, "rx_lemma.right_zero", first_failure(d.e0, [&](auto x) {
               auto const rx = r_class(x);
               for (Element a : rx) {
                 for (Element b : rx) {
                   if (s(a, b) != b) {
                     return false;
                   }
                 }
               }
               return true;
             }));
      record(r, "rx_lemma.product", first_failure(d.e0, d.e0, [&](auto x, auto y) {
               // x <= y implies R_x R_y in R_x
               if (s(x, y) != x || s(y, x) != x) {
                 return true;
               }
               return subset(products(s, r_class(x), r_class(y)), r_class(x));
             }));
    } else {
      r.not_applicable("quasi_adequate_identities", "not quasi-adequate");
    }

    auto const profile = transversal_profile(s, d);
    if (profile.is_quasi_ideal) {
      bool const admissible = profile.is_admissible;
      if (qa == admissible) {
        r.add("quasi_ideal.qa_iff_bar_morphism");
      } else {
        r.fail("quasi_ideal.qa_iff_bar_morphism",
               std::string("quasi-adequate=") + (qa ? "T" : "F")
                   + " bar-morphism=" + (admissible ? "T" : "F"));
      }
      record(r, "quasi_ideal.bar_and_ef", first_failure(all, all, [&](auto x, auto y) {
               Element xy = s(x, y);
               return bar[xy] == s(s(s(bar[x], f[x]), e[y]), bar[y])
                      && e[xy] == s(e[x], e[xy]) && f[xy] == s(f[xy], f[y]);
             }));
    } else {
      r.not_applicable("quasi_ideal", "transversal is not a quasi-ideal");
    }

    if (qa && profile.is_admissible) {
      auto middle = [&](Element x, Element y) {
        return s(s(s(bar[x], f[x]), e[y]), bar[y]);
      };
      record(r, "admissible.xybar_lemma", first_failure(all, all, [&](auto x, auto y) {
               return bar[s(x, y)] == bar[middle(x, y)];
             }));
      record(r, "admissible.ef_theorem", first_failure(all, all, [&](auto x, auto y) {
               Element m = middle(x, y), xy = s(x, y);
               return e[xy] == s(e[x], e[m]) && f[xy] == s(f[m], f[y]);
             }));
      record(r, "admissible.factorisation", first_failure(all, all, [&](auto x, auto y) {
               Element m   = middle(x, y);
               Element lhs = s(s(s(e[x], bar[x]), f[x]), s(s(e[y], bar[y]), f[y]));
               Element rhs = s(s(s(e[x], e[m]), bar[m]), s(f[m], f[y]));
               return lhs == rhs;
             }));
    } else {
      r.not_applicable("admissible", "needs quasi-adequate S and admissible S0");
    }

    if (qa) {
      // delta is a congruence iff delta = ker(bar) iff bar is a morphism,
      // and then S/delta is S0
      auto const dl      = delta(s);
      auto const bar_ker = Partition::kernel(bar);
      bool const c1      = dl.is_congruence;
      bool const c2 = dl.partition.has_value() && *dl.partition == bar_ker;
      bool const c3 = profile.is_admissible;
      std::string detail = std::string("congruence=") + (c1 ? "T" : "F")
                           + " kernel=" + (c2 ? "T" : "F")
                           + " admissible=" + (c3 ? "T" : "F");
      if (c1 == c2 && c2 == c3) {
        r.add("delta_prop.equivalent").detail = detail;
      } else {
        r.fail("delta_prop.equivalent", detail);
      }
      if (c1) {
        auto const sub = restrict_to(s, d.s0);
        if (find_isomorphism(dl.quotient->semigroup, sub.semigroup)) {
          r.add("delta_prop.quotient_is_s0");
        } else {
          r.fail("delta_prop.quotient_is_s0", "S/delta not isomorphic to S0");
        }
      }
    }
    return r;
  }

}  // namespace sgt
