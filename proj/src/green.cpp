#include "sgt/green.hpp"

#include <algorithm>  // for find, sort

#include "sgt/error.hpp"

namespace sgt {

  namespace {
    using Bits = std::vector<char>;

    ElementSet members_if(std::size_t n, auto pred) {
      ElementSet out;
      for (Element a = 0; a < n; ++a) {
        if (pred(a)) {
          out.push_back(a);
        }
      }
      return out;
    }

    bool idempotents_commute(FiniteSemigroup const& s, ElementSet const& e) {
      for (Element x : e) {
        for (Element y : e) {
          if (s(x, y) != s(y, x)) {
            return false;
          }
        }
      }
      return true;
    }

    bool is_band_subset(FiniteSemigroup const& s, ElementSet const& e) {
      return is_closed(s, e);
    }

    // Number of idempotents in each class.
    std::vector<std::size_t> idempotent_counts(FiniteSemigroup const& s,
                                               Partition const&       p) {
      std::vector<std::size_t> out(p.number_of_classes(), 0);
      for (Element a = 0; a < s.size(); ++a) {
        if (s.is_idempotent(a)) {
          ++out[p.class_of(a)];
        }
      }
      return out;
    }

    // Kuhn's augmenting-path bipartite matching; true iff perfect.
    bool has_perfect_matching(std::vector<std::vector<std::size_t>> const& adj,
                              std::size_t right_size) {
      std::size_t const        none = adj.size();
      std::vector<std::size_t> match_right(right_size, none);
      for (std::size_t u = 0; u < adj.size(); ++u) {
        std::vector<char> seen(right_size, 0);
        auto augment = [&](auto&& self, std::size_t v) -> bool {
          for (auto w : adj[v]) {
            if (seen[w]) {
              continue;
            }
            seen[w] = 1;
            if (match_right[w] == none || self(self, match_right[w])) {
              match_right[w] = v;
              return true;
            }
          }
          return false;
        };
        if (!augment(augment, u)) {
          return false;
        }
      }
      return true;
    }

    // <e>: the subsemigroup generated by the idempotents of eSe.
    ElementSet local_idempotent_closure(FiniteSemigroup const& s, Element e) {
      auto seed = members_if(s.size(), [&](Element f) {
        return s.is_idempotent(f) && s(e, f) == f && s(f, e) == f;
      });
      return generated_subsemigroup(s, seed);
    }

    bool idempotent_connected(FiniteSemigroup const& s,
                              AbundanceProfile const& p) {
      for (Element a = 0; a < s.size(); ++a) {
        bool found = false;
        for (Element plus : p.rstar_idempotents[a]) {
          auto const from = local_idempotent_closure(s, plus);
          for (Element star : p.lstar_idempotents[a]) {
            auto const to = local_idempotent_closure(s, star);
            if (from.size() != to.size()) {
              continue;
            }
            // x may be sent to y iff xa = ay
            std::vector<std::vector<std::size_t>> adj(from.size());
            for (std::size_t i = 0; i < from.size(); ++i) {
              for (std::size_t k = 0; k < to.size(); ++k) {
                if (s(from[i], a) == s(a, to[k])) {
                  adj[i].push_back(k);
                }
              }
            }
            if (has_perfect_matching(adj, to.size())) {
              found = true;
              break;
            }
          }
          if (found) {
            break;
          }
        }
        if (!found) {
          return false;
        }
      }
      return true;
    }
  }  // namespace

  StarRelations star_relations(FiniteSemigroup const& s) {
    std::size_t const n   = s.size();
    auto const        one = adjoin_identity(s);
    std::size_t const m   = one.size();
    // kernel of left (resp. right) multiplication on a, over S^1 x S^1
    std::vector<Bits> left(n, Bits(m * m)), right(n, Bits(m * m));
    for (Element a = 0; a < n; ++a) {
      for (Element x = 0; x < m; ++x) {
        for (Element y = 0; y < m; ++y) {
          left[a][x * m + y]  = one(x, a) == one(y, a);
          right[a][x * m + y] = one(a, x) == one(a, y);
        }
      }
    }
    StarRelations out;
    out.rstar = Partition::kernel(left);
    out.lstar = Partition::kernel(right);
    out.hstar = out.rstar.meet(out.lstar);
    return out;
  }

  GreenRelations green_relations(FiniteSemigroup const& s) {
    std::size_t const n = s.size();
    std::vector<Bits> right_ideal(n, Bits(n, 0)), left_ideal(n, Bits(n, 0)),
        ideal(n, Bits(n, 0));
    for (Element a = 0; a < n; ++a) {
      right_ideal[a][a] = left_ideal[a][a] = ideal[a][a] = 1;
      for (Element x = 0; x < n; ++x) {
        right_ideal[a][s(a, x)] = 1;
        left_ideal[a][s(x, a)]  = 1;
        ideal[a][s(a, x)] = ideal[a][s(x, a)] = 1;
        for (Element y = 0; y < n; ++y) {
          ideal[a][s(s(x, a), y)] = 1;
        }
      }
    }
    GreenRelations out;
    out.r = Partition::kernel(right_ideal);
    out.l = Partition::kernel(left_ideal);
    out.h = out.r.meet(out.l);
    out.d = out.r.join(out.l);
    out.j = Partition::kernel(ideal);
    return out;
  }

  Regularity regular_and_inverses(FiniteSemigroup const& s) {
    Regularity out;
    out.inverses.resize(s.size());
    for (Element x = 0; x < s.size(); ++x) {
      for (Element y = 0; y < s.size(); ++y) {
        if (s(s(x, y), x) == x && s(s(y, x), y) == y) {
          out.inverses[x].push_back(y);
        }
      }
      if (!out.inverses[x].empty()) {
        out.regular.push_back(x);
      }
    }
    return out;
  }

  AbundanceProfile abundance_profile(FiniteSemigroup const& s) {
    std::size_t const n    = s.size();
    auto const        star = star_relations(s);
    auto const        idem = s.idempotents();
    AbundanceProfile  p;
    p.rstar_idempotents.resize(n);
    p.lstar_idempotents.resize(n);
    for (Element a = 0; a < n; ++a) {
      for (Element e : idem) {
        if (star.rstar.same(a, e)) {
          p.rstar_idempotents[a].push_back(e);
        }
        if (star.lstar.same(a, e)) {
          p.lstar_idempotents[a].push_back(e);
        }
      }
    }
    auto const rcounts = idempotent_counts(s, star.rstar);
    auto const lcounts = idempotent_counts(s, star.lstar);
    auto all = [](std::vector<std::size_t> const& v, auto pred) {
      return std::all_of(v.begin(), v.end(), pred);
    };
    p.is_abundant = all(rcounts, [](auto c) { return c >= 1; })
                    && all(lcounts, [](auto c) { return c >= 1; });
    bool const commute = idempotents_commute(s, idem);
    bool const band    = is_band_subset(s, idem);
    p.is_adequate      = p.is_abundant && commute;
    p.is_left_adequate
        = p.is_abundant && all(rcounts, [](auto c) { return c == 1; });
    p.is_right_adequate
        = p.is_abundant && all(lcounts, [](auto c) { return c == 1; });
    p.is_quasi_adequate = p.is_abundant && band;

    p.left_ample_applicable = p.is_left_adequate;
    if (p.is_left_adequate) {
      // ae = (ae)+ a with (ae)+ the unique idempotent of R*_{ae}
      p.is_left_ample = true;
      for (Element a = 0; a < n && p.is_left_ample; ++a) {
        for (Element e : idem) {
          Element ae = s(a, e);
          if (ae != s(p.rstar_idempotents[ae].front(), a)) {
            p.is_left_ample = false;
            break;
          }
        }
      }
    }
    p.is_idempotent_connected = p.is_abundant && idempotent_connected(s, p);
    p.is_bountiful = p.is_idempotent_connected && p.is_quasi_adequate;

    auto const reg = regular_and_inverses(s);
    p.is_regular   = reg.regular.size() == n;
    p.is_orthodox  = p.is_regular && band;
    p.is_inverse   = p.is_regular && commute;
    return p;
  }

  bool is_abundant(FiniteSemigroup const& s) {
    auto const star    = star_relations(s);
    auto const rcounts = idempotent_counts(s, star.rstar);
    auto const lcounts = idempotent_counts(s, star.lstar);
    return std::find(rcounts.begin(), rcounts.end(), 0) == rcounts.end()
           && std::find(lcounts.begin(), lcounts.end(), 0) == lcounts.end();
  }

  bool is_adequate(FiniteSemigroup const& s) {
    return idempotents_commute(s, s.idempotents()) && is_abundant(s);
  }

  bool is_quasi_adequate(FiniteSemigroup const& s) {
    return is_band_subset(s, s.idempotents()) && is_abundant(s);
  }

  StarPlusMaps star_plus(FiniteSemigroup const& s) {
    std::size_t const n    = s.size();
    auto const        star = star_relations(s);
    auto const        idem = s.idempotents();
    if (!idempotents_commute(s, idem)) {
      throw Error(ErrorCode::NotAdequate, "idempotents do not commute");
    }
    StarPlusMaps out;
    out.star.assign(n, n);
    out.plus.assign(n, n);
    for (Element a = 0; a < n; ++a) {
      for (Element e : idem) {
        if (star.rstar.same(a, e)) {
          if (out.plus[a] != n) {
            throw Error(ErrorCode::NotAdequate,
                        "two idempotents in the R*-class of "
                            + std::to_string(a),
                        {a});
          }
          out.plus[a] = e;
        }
        if (star.lstar.same(a, e)) {
          if (out.star[a] != n) {
            throw Error(ErrorCode::NotAdequate,
                        "two idempotents in the L*-class of "
                            + std::to_string(a),
                        {a});
          }
          out.star[a] = e;
        }
      }
      if (out.plus[a] == n || out.star[a] == n) {
        throw Error(ErrorCode::NotAdequate,
                    "no idempotent in a starred class of " + std::to_string(a),
                    {a});
      }
    }
    for (Element a = 0; a < n; ++a) {
      if (s(out.plus[a], a) != a || s(a, out.star[a]) != a) {
        invariant_broken("a+ a = a = a a* fails at " + std::to_string(a));
      }
      for (Element b = 0; b < n; ++b) {
        if (out.star[s(a, b)] != out.star[s(out.star[a], b)]
            || out.plus[s(a, b)] != out.plus[s(a, out.plus[b])]) {
          invariant_broken("(ab)* = (a*b)* or (ab)+ = (ab+)+ fails at ("
                           + std::to_string(a) + "," + std::to_string(b) + ")");
        }
      }
    }
    return out;
  }

  DeltaResult delta(FiniteSemigroup const& s) {
    std::size_t const n = s.size();
    auto const        p = abundance_profile(s);
    if (!p.is_quasi_adequate) {
      throw Error(ErrorCode::NotQuasiAdequate,
                  "delta needs an abundant semigroup whose idempotents form a "
                  "band");
    }
    auto const band = restrict_to(s, s.idempotents());
    auto j_class    = [&](Element e) {
      return band.to_parent_set(
          band_j_class(band.semigroup, band.local(e)));
    };
    DeltaResult out;
    out.related.assign(n, std::vector<char>(n, 0));
    for (Element a = 0; a < n; ++a) {
      std::optional<std::vector<char>> first;
      for (Element plus : p.rstar_idempotents[a]) {
        auto const left = j_class(plus);
        for (Element star : p.lstar_idempotents[a]) {
          auto const        right = j_class(star);
          std::vector<char> row(n, 0);
          for (Element e : left) {
            for (Element f : right) {
              row[s(s(e, a), f)] = 1;
            }
          }
          if (!first) {
            first = row;
          } else if (*first != row) {
            invariant_broken("delta depends on the choice of a+ / a* at "
                             + std::to_string(a));
          }
        }
      }
      out.related[a] = *first;
    }
    for (Element a = 0; a < n; ++a) {
      for (Element b = 0; b < n; ++b) {
        if (out.related[a][b]) {
          out.pairs.emplace_back(a, b);
        }
      }
    }
    bool eq = true;
    for (Element a = 0; a < n && eq; ++a) {
      eq = out.related[a][a];
      for (Element b = 0; b < n && eq; ++b) {
        if (out.related[a][b]) {
          eq = out.related[b][a] && out.related[b] == out.related[a];
        }
      }
    }
    out.is_equivalence = eq;
    if (eq) {
      auto part = Partition::kernel(out.related);
      if (is_congruence(s, part)) {
        out.is_congruence = true;
        out.quotient      = quotient(s, part);
      }
      out.partition = std::move(part);
    }
    return out;
  }

  bool is_admissible(FiniteSemigroup const& s,
                     FiniteSemigroup const& t,
                     ElementMap const&      phi) {
    if (!is_morphism(s, t, phi)) {
      throw Error(ErrorCode::NotAMorphism, "map is not a morphism");
    }
    auto const ss = star_relations(s);
    auto const ts = star_relations(t);
    for (Element a = 0; a < s.size(); ++a) {
      for (Element b = 0; b < s.size(); ++b) {
        if (ss.rstar.same(a, b) && !ts.rstar.same(phi[a], phi[b])) {
          return false;
        }
        if (ss.lstar.same(a, b) && !ts.lstar.same(phi[a], phi[b])) {
          return false;
        }
      }
    }
    return true;
  }

  Partition min_adequate_admissible_congruence(FiniteSemigroup const& s,
                                               Limits const& limits) {
    if (!is_quasi_adequate(s)) {
      throw Error(ErrorCode::NotQuasiAdequate, "input is not quasi-adequate");
    }
    std::vector<Partition> good;
    for (auto& rho : enumerate_congruences(s, limits)) {
      auto q = quotient(s, rho);
      if (is_adequate(q.semigroup)
          && is_admissible(s, q.semigroup, q.natural_map)) {
        good.push_back(std::move(rho));
      }
    }
    std::vector<Partition const*> minima;
    for (auto const& rho : good) {
      if (std::all_of(good.begin(), good.end(), [&](auto const& other) {
            return rho.refines(other);
          })) {
        minima.push_back(&rho);
      }
    }
    if (minima.size() != 1) {
      throw Error(ErrorCode::NoMinimum,
                  std::to_string(good.size())
                      + " adequate admissible congruences, "
                      + std::to_string(minima.size()) + " contained in all");
    }
    return *minima.front();
  }

}  // namespace sgt
