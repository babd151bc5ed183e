#include "sgt/decomposer.hpp"

#include <algorithm>  // for binary_search

#include "sgt/error.hpp"
#include "sgt/green.hpp"

namespace sgt {

  namespace {
    using Witness = std::vector<std::size_t>;

    Restriction closed_part(FiniteSemigroup const& s,
                            ElementSet const&      u,
                            char const*            what) {
      if (!is_closed(s, u)) {
        invariant_broken(std::string(what) + " is not a subsemigroup");
      }
      return restrict_to(s, u);
    }

    void require_quasi_adequate_admissible(FiniteSemigroup const&    s,
                                           TransversalProfile const& p) {
      if (!is_quasi_adequate(s)) {
        throw Error(ErrorCode::NotQuasiAdequate, "S is not quasi-adequate");
      }
      if (!p.is_admissible) {
        throw Error(ErrorCode::NotAdmissible, "the transversal is not admissible");
      }
    }

    // The pair whose product phi fails to preserve, or two elements with the
    // same image, or nothing when phi is an isomorphism.
    std::optional<Witness> iso_failure(FiniteSemigroup const& s,
                                       FiniteSemigroup const& t,
                                       ElementMap const&      phi) {
      std::size_t const n = s.size();
      if (t.size() != n || phi.size() != n) {
        return Witness{};
      }
      std::vector<std::optional<Element>> seen(n);
      for (Element x = 0; x < n; ++x) {
        if (phi[x] >= n) {
          return Witness{x};
        }
        if (seen[phi[x]]) {
          return Witness{*seen[phi[x]], x};
        }
        seen[phi[x]] = x;
      }
      for (Element x = 0; x < n; ++x) {
        for (Element y = 0; y < n; ++y) {
          if (phi[s(x, y)] != t(phi[x], phi[y])) {
            return Witness{x, y};
          }
        }
      }
      return std::nullopt;
    }

    void require_iso(Report&                r,
                     std::string const&     name,
                     FiniteSemigroup const& s,
                     FiniteSemigroup const& t,
                     ElementMap const&      phi) {
      if (auto w = iso_failure(s, t, phi)) {
        r.fail(name, "map is not an isomorphism", *w);
        throw Error(ErrorCode::IsoFailed, name + ": map is not an isomorphism",
                    *w);
      }
      r.add(name);
    }

    Element lookup_index(BuiltSemigroup const&       b,
                         std::vector<Element> const& tuple,
                         Element                     x) {
      auto idx = b.index_of(tuple);
      if (!idx) {
        throw Error(ErrorCode::IsoFailed,
                    "image of " + std::to_string(x) + " is not in W",
                    {x});
      }
      return *idx;
    }
  }  // namespace

  ExtractedStructure extract_structure(FiniteSemigroup const&          s,
                                       TransversalDecomposition const& d) {
    require_quasi_adequate_admissible(s, transversal_profile(s, d));
    ExtractedStructure out{{},
                           restrict_to(s, d.s0),
                           closed_part(s, d.i_set, "I"),
                           closed_part(s, d.lambda_set, "Lambda")};
    auto& sk       = out.input.skeleton;
    sk.s0          = out.s0.semigroup;
    sk.i_band      = out.i_set.semigroup;
    sk.lambda_band = out.lambda_set.semigroup;
    for (Element c : sk.s0.idempotents()) {
      Element const parent = out.s0.to_parent[c];
      sk.e0_in_i[c]        = out.i_set.local(parent);
      sk.e0_in_lambda[c]   = out.lambda_set.local(parent);
    }
    auto const        fr = make_frame(sk);
    std::size_t const n0 = sk.s0.size();
    for (Element x = 0; x < n0; ++x) {
      for (Element y = 0; y < n0; ++y) {
        Element const px = out.s0.to_parent[x], py = out.s0.to_parent[y];
        Element const xy = sk.s0(x, y);
        auto&         a  = out.input.alpha[{x, y}];
        auto&         b  = out.input.beta[{x, y}];
        for (Element f : fr.r_star[x]) {
          for (Element g : fr.l_plus[y]) {
            Element const pf = out.lambda_set.to_parent[f];
            Element const pg = out.i_set.to_parent[g];
            Element const p  = s(s(s(px, pf), pg), py);
            Element const av = out.i_set.local(d.e_of[p]);
            Element const bv = out.lambda_set.local(d.f_of[p]);
            if (!std::binary_search(fr.l_plus[fr.sp.plus[xy]].begin(),
                                    fr.l_plus[fr.sp.plus[xy]].end(), av)
                || !std::binary_search(fr.r_star[fr.sp.star[xy]].begin(),
                                       fr.r_star[fr.sp.star[xy]].end(), bv)) {
              invariant_broken("e_{xaby} or f_{xaby} leaves its target class");
            }
            a[{f, g}] = av;
            b[{f, g}] = bv;
          }
        }
      }
    }
    return out;
  }

  ExtractedAction extract_action(FiniteSemigroup const&          s,
                                 TransversalDecomposition const& d) {
    auto const profile = transversal_profile(s, d);
    if (!abundance_profile(s).is_left_adequate) {
      throw Error(ErrorCode::NotLeftAdequate, "S is not left adequate");
    }
    require_quasi_adequate_admissible(s, profile);
    ExtractedAction out{{}, restrict_to(s, d.s0), closed_part(s, d.i_set, "I")};
    if (!abundance_profile(out.s0.semigroup).is_left_ample) {
      throw Error(ErrorCode::NotLeftAmple, "the transversal is not left ample");
    }
    auto& t  = out.table;
    t.s0     = out.s0.semigroup;
    t.i_band = out.i_set.semigroup;
    for (Element c : t.s0.idempotents()) {
      t.e0_in_i[c] = out.i_set.local(out.s0.to_parent[c]);
    }
    std::size_t const n0 = t.s0.size(), ni = t.i_band.size();
    t.act.assign(n0, std::vector<Element>(ni));
    for (Element x = 0; x < n0; ++x) {
      Element const px = out.s0.to_parent[x];
      for (Element e = 0; e < ni; ++e) {
        Element const pe = out.i_set.to_parent[e];
        Element const v  = d.e_of[s(px, pe)];
        for (Element py : d.s0) {
          Element const yp = d.plus0[py];
          bool const    in_class = s(pe, yp) == pe && s(yp, pe) == yp;
          if (in_class && d.e_of[s(s(px, pe), py)] != v) {
            invariant_broken("x*e depends on the witness y");
          }
        }
        t.act[x][e] = out.i_set.local(v);
      }
    }
    for (Element x = 0; x < n0; ++x) {
      for (Element e = 0; e < ni; ++e) {
        for (Element f = 0; f < ni; ++f) {
          if (t.act[x][t.i_band(e, f)]
              != t.i_band(t.act[x][e], t.act[x][f])) {
            invariant_broken("extracted action is not distributive");
          }
        }
      }
    }
    return out;
  }

  SpinedFactors extract_spined_factors(FiniteSemigroup const&          s,
                                       TransversalDecomposition const& d) {
    auto const profile = transversal_profile(s, d);
    if (!is_quasi_adequate(s)) {
      throw Error(ErrorCode::NotQuasiAdequate, "S is not quasi-adequate");
    }
    if (!profile.is_quasi_ideal) {
      throw Error(ErrorCode::NotQuasiIdeal, "the transversal is not a quasi-ideal");
    }
    if (!profile.is_admissible) {
      throw Error(ErrorCode::NotAdmissible, "the transversal is not admissible");
    }
    SpinedFactors out{closed_part(s, d.l_set, "L"),
                      closed_part(s, d.r_set, "R"),
                      {},
                      {},
                      {}};
    out.l = {out.l_part.semigroup, out.l_part.to_local_set(d.s0)};
    out.r = {out.r_part.semigroup, out.r_part.to_local_set(d.s0)};
    for (Element x : d.s0) {
      out.identification[out.l_part.local(x)] = out.r_part.local(x);
    }
    return out;
  }

  RoundtripReport roundtrip(FiniteSemigroup const&          s,
                            TransversalDecomposition const& d) {
    auto const profile = transversal_profile(s, d);
    if (!profile.is_admissible) {
      throw Error(ErrorCode::NotAdmissible, "the transversal is not admissible");
    }
    std::size_t const n  = s.size();
    auto const        ex = extract_structure(s, d);
    RoundtripReport   out;
    auto&             r = out.checks;
    r.append(validate_structure_input(ex.input), "structure.");
    out.rebuilt = build_w(ex.input);
    out.iso.resize(n);
    for (Element x = 0; x < n; ++x) {
      out.iso[x] = lookup_index(out.rebuilt,
                                {ex.i_set.local(d.e_of[x]),
                                 ex.s0.local(d.bar_of[x]),
                                 ex.lambda_set.local(d.f_of[x])},
                                x);
    }
    require_iso(r, "structure.iso", s, out.rebuilt.w, out.iso);

    // semidirect roundtrip
    if (abundance_profile(s).is_left_adequate
        && abundance_profile(ex.s0.semigroup).is_left_ample) {
      auto const ea = extract_action(s, d);
      r.append(validate_action_table(ea.table), "semidirect.");
      out.semidirect = build_semidirect(ea.table);
      ElementMap iso(n);
      for (Element x = 0; x < n; ++x) {
        iso[x] = lookup_index(
            *out.semidirect,
            {ea.i_set.local(d.e_of[x]), ea.s0.local(d.bar_of[x])},
            x);
      }
      require_iso(r, "semidirect.iso", s, out.semidirect->w, iso);
    } else {
      r.not_applicable("semidirect", "S is not left adequate with left ample S0");
    }

    // spined and quasi-ideal roundtrips
    if (profile.is_quasi_ideal) {
      auto const sf = extract_spined_factors(s, d);
      out.spined    = build_spined_product(sf.l, sf.r, sf.identification);
      auto const& p = *out.spined;
      auto const& w = out.rebuilt;

      ElementMap theta(p.w.size());
      for (Element q = 0; q < p.w.size(); ++q) {
        Element const x = sf.l_part.to_parent[p.legend[q][0]];
        Element const a = sf.r_part.to_parent[p.legend[q][1]];
        theta[q]        = lookup_index(w,
                                       {ex.i_set.local(d.e_of[x]),
                                        ex.s0.local(d.bar_of[x]),
                                        ex.lambda_set.local(d.f_of[a])},
                                       q);
      }
      require_iso(r, "spined.theta", p.w, w.w, theta);

      ElementMap phi(w.w.size());
      for (Element q = 0; q < w.w.size(); ++q) {
        Element const g  = ex.i_set.to_parent[w.legend[q][0]];
        Element const x  = ex.s0.to_parent[w.legend[q][1]];
        Element const l  = ex.lambda_set.to_parent[w.legend[q][2]];
        auto const    gx = sf.l_part.from_parent[s(g, x)];
        auto const    xl = sf.r_part.from_parent[s(x, l)];
        if (!gx || !xl) {
          r.fail("spined.phi", "(gx, xl) leaves L x R", {q});
          throw Error(ErrorCode::IsoFailed, "spined.phi: (gx, xl) leaves L x R",
                      {q});
        }
        phi[q] = lookup_index(p, {*gx, *xl}, q);
      }
      require_iso(r, "spined.phi", w.w, p.w, phi);
      bool inverse = true;
      for (Element q = 0; q < p.w.size(); ++q) {
        inverse = inverse && phi[theta[q]] == q;
      }
      if (inverse) {
        r.add("spined.theta_phi_inverse");
      } else {
        r.fail("spined.theta_phi_inverse", "phi is not the inverse of theta");
      }

      out.quasi_ideal = build_quasi_ideal_w(ex.input.skeleton);
      if (out.quasi_ideal->legend == w.legend && out.quasi_ideal->w == w.w) {
        r.add("quasi_ideal.pointwise");
      } else {
        r.fail("quasi_ideal.pointwise",
               "quasi-ideal build differs from the general build");
      }
    } else {
      r.not_applicable("spined", "the transversal is not a quasi-ideal");
    }
    return out;
  }

}  // namespace sgt
