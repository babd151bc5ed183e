#include "sgt/constructions.hpp"

#include <algorithm>  // for sort, find, binary_search
#include <sstream>    // for ostringstream

#include "sgt/error.hpp"

namespace sgt {

  namespace {
    using Witness = std::vector<std::size_t>;

    bool contains(ElementSet const& set, Element x) {
      return std::binary_search(set.begin(), set.end(), x);
    }

    std::string join(Witness const& w) {
      std::ostringstream os;
      for (std::size_t i = 0; i < w.size(); ++i) {
        os << (i == 0 ? "" : ",") << w[i];
      }
      return os.str();
    }

    Check const* first_failed(Report const& r) {
      for (auto const& c : r.checks()) {
        if (c.applicable && !c.passed) {
          return &c;
        }
      }
      return nullptr;
    }

    [[noreturn]] void postcondition(std::string const& what) {
      throw Error(ErrorCode::PostconditionFailed, what);
    }

    void require_all(Report const& r, std::string const& builder) {
      if (auto const* c = first_failed(r)) {
        postcondition(builder + ": " + c->name + " " + c->detail);
      }
    }

    // Checks that emb: E(s0) -> band is an injective morphism whose image
    // meets every L-class (use_l) or R-class of the band exactly once.
    std::optional<std::string> embedding_problem(
        FiniteSemigroup const&            s0,
        FiniteSemigroup const&            band,
        std::map<Element, Element> const& emb,
        bool                              use_l) {
      auto const e0 = s0.idempotents();
      if (emb.size() != e0.size()) {
        return "embedding is not defined on E(S0) exactly";
      }
      ElementSet image;
      for (Element c : e0) {
        auto it = emb.find(c);
        if (it == emb.end()) {
          return "embedding misses " + std::to_string(c);
        }
        if (it->second >= band.size()) {
          return "embedding value out of range";
        }
        image.push_back(it->second);
      }
      std::sort(image.begin(), image.end());
      if (std::adjacent_find(image.begin(), image.end()) != image.end()) {
        return "embedding is not injective";
      }
      for (Element c : e0) {
        for (Element d : e0) {
          if (band(emb.at(c), emb.at(d)) != emb.at(s0(c, d))) {
            return "embedding is not a morphism at " + std::to_string(c) + ","
                   + std::to_string(d);
          }
        }
      }
      for (Element e = 0; e < band.size(); ++e) {
        std::size_t count = 0;
        for (Element c : image) {
          bool related = use_l ? (band(e, c) == e && band(c, e) == c)
                               : (band(e, c) == c && band(c, e) == e);
          count += related;
        }
        if (count != 1) {
          return "element " + std::to_string(e) + " is related to "
                 + std::to_string(count) + " elements of E0";
        }
      }
      return std::nullopt;
    }

    void record(Report& r, std::string name, std::optional<std::string> problem) {
      if (problem) {
        r.fail(std::move(name), *problem);
      } else {
        r.add(std::move(name));
      }
    }

    std::optional<Element> lookup(MapFamily const& fam,
                                  Element          x,
                                  Element          y,
                                  Element          f,
                                  Element          g) {
      auto it = fam.find({x, y});
      if (it == fam.end()) {
        return std::nullopt;
      }
      auto jt = it->second.find({f, g});
      if (jt == it->second.end()) {
        return std::nullopt;
      }
      return jt->second;
    }

    std::string tuple_label(std::vector<std::string> const& parts) {
      std::string out = "(";
      for (std::size_t i = 0; i < parts.size(); ++i) {
        out += (i == 0 ? "" : ",") + parts[i];
      }
      return out + ")";
    }

    FiniteSemigroup table_from(std::vector<std::vector<Element>> const& rows,
                               std::vector<std::string>                 labels,
                               std::string const&                       builder) {
      try {
        return validate_table(rows, std::move(labels));
      } catch (Error const& e) {
        postcondition(builder + ": product is not a semigroup: " + e.what());
      }
    }

    // Checks shared by every builder: W quasi-adequate, W0 a verified,
    // admissible adequate transversal, and x -> s0_embedding[x] an
    // isomorphism S0 -> W0.
    TransversalProfile verify_common(BuiltSemigroup& b) {
      auto& r = b.checks;
      if (is_quasi_adequate(b.w)) {
        r.add("w.quasi_adequate");
      } else {
        r.fail("w.quasi_adequate", "W is not quasi-adequate");
      }
      try {
        b.decomposition = verify_adequate_transversal(b.w, b.w0);
        r.add("w0.adequate_transversal");
      } catch (Error const& e) {
        r.fail("w0.adequate_transversal", e.what(), e.witness());
        return {};
      }
      auto profile = transversal_profile(b.w, b.decomposition);
      if (profile.is_admissible) {
        r.add("w0.admissible");
      } else {
        r.fail("w0.admissible", "bar is not a morphism");
      }
      auto const sub = restrict_to(b.w, b.w0);
      ElementMap phi(b.s0.size());
      for (Element x = 0; x < b.s0.size(); ++x) {
        phi[x] = sub.local(b.s0_embedding[x]);
      }
      if (is_isomorphism(b.s0, sub.semigroup, phi)) {
        r.add("w0.isomorphic_to_s0");
      } else {
        r.fail("w0.isomorphic_to_s0", "embedding is not an isomorphism");
      }
      return profile;
    }

    void check_band_copy(Report&                r,
                         std::string const&     name,
                         FiniteSemigroup const& w,
                         ElementSet const&      part,
                         FiniteSemigroup const& band) {
      if (!is_closed(w, part)) {
        r.fail(name, "not a subsemigroup of W");
        return;
      }
      if (find_isomorphism(restrict_to(w, part).semigroup, band)) {
        r.add(name);
      } else {
        r.fail(name, "not isomorphic to the input band");
      }
    }

    FiniteSemigroup idempotent_semilattice(FiniteSemigroup const& s0) {
      return restrict_to(s0, s0.idempotents()).semigroup;
    }
  }  // namespace

  ElementSet band_l_class(FiniteSemigroup const& band, Element e) {
    ElementSet out;
    for (Element g = 0; g < band.size(); ++g) {
      if (band(g, e) == g && band(e, g) == e) {
        out.push_back(g);
      }
    }
    return out;
  }

  ElementSet band_r_class(FiniteSemigroup const& band, Element e) {
    ElementSet out;
    for (Element g = 0; g < band.size(); ++g) {
      if (band(e, g) == g && band(g, e) == e) {
        out.push_back(g);
      }
    }
    return out;
  }

  Report check_skeleton(StructureSkeleton const& sk) {
    Report r;
    bool const adequate = sk.s0.size() > 0 && is_adequate(sk.s0);
    if (adequate) {
      r.add("prerequisites.s0_adequate");
    } else {
      r.fail("prerequisites.s0_adequate", "S0 is not adequate");
    }
    bool const i_ok = band_class(sk.i_band).is_left_regular;
    bool const l_ok = band_class(sk.lambda_band).is_right_regular;
    if (i_ok) {
      r.add("prerequisites.i_left_regular");
    } else {
      r.fail("prerequisites.i_left_regular", "I is not a left regular band");
    }
    if (l_ok) {
      r.add("prerequisites.lambda_right_regular");
    } else {
      r.fail("prerequisites.lambda_right_regular",
             "Lambda is not a right regular band");
    }
    if (i_ok) {
      record(r, "prerequisites.e0_in_i",
             embedding_problem(sk.s0, sk.i_band, sk.e0_in_i, true));
    } else {
      r.not_applicable("prerequisites.e0_in_i", "I is not left regular");
    }
    if (l_ok) {
      record(r, "prerequisites.e0_in_lambda",
             embedding_problem(sk.s0, sk.lambda_band, sk.e0_in_lambda, false));
    } else {
      r.not_applicable("prerequisites.e0_in_lambda",
                       "Lambda is not right regular");
    }
    return r;
  }

  StructureFrame make_frame(StructureSkeleton const& sk) {
    auto const r = check_skeleton(sk);
    if (auto const* c = first_failed(r)) {
      ErrorCode code = ErrorCode::TransversalInvalid;
      if (c->name == "prerequisites.s0_adequate") {
        code = ErrorCode::NotAdequate;
      } else if (c->name == "prerequisites.i_left_regular"
                 || c->name == "prerequisites.lambda_right_regular") {
        code = ErrorCode::NotABand;
      }
      throw Error(code, c->name + ": " + c->detail);
    }
    StructureFrame fr;
    std::size_t const n0 = sk.s0.size();
    fr.sp                = star_plus(sk.s0);
    fr.e0                = sk.s0.idempotents();
    fr.to_i.assign(n0, sk.i_band.size());
    fr.to_lambda.assign(n0, sk.lambda_band.size());
    for (Element c : fr.e0) {
      fr.to_i[c]      = sk.e0_in_i.at(c);
      fr.to_lambda[c] = sk.e0_in_lambda.at(c);
    }
    fr.l_plus.resize(n0);
    fr.r_star.resize(n0);
    for (Element x = 0; x < n0; ++x) {
      fr.l_plus[x] = band_l_class(sk.i_band, fr.to_i[fr.sp.plus[x]]);
      fr.r_star[x] = band_r_class(sk.lambda_band, fr.to_lambda[fr.sp.star[x]]);
    }
    fr.i_root.assign(sk.i_band.size(), n0);
    fr.lambda_root.assign(sk.lambda_band.size(), n0);
    for (Element c : fr.e0) {
      for (Element e : band_l_class(sk.i_band, fr.to_i[c])) {
        fr.i_root[e] = c;
      }
      for (Element f : band_r_class(sk.lambda_band, fr.to_lambda[c])) {
        fr.lambda_root[f] = c;
      }
    }
    return fr;
  }

  StructureInput canonical_structure_input(StructureSkeleton const& sk) {
    auto const     fr = make_frame(sk);
    StructureInput in{sk, {}, {}};
    std::size_t const n0 = sk.s0.size();
    for (Element x = 0; x < n0; ++x) {
      for (Element y = 0; y < n0; ++y) {
        Element const xy = sk.s0(x, y);
        auto&         a  = in.alpha[{x, y}];
        auto&         b  = in.beta[{x, y}];
        for (Element f : fr.r_star[x]) {
          for (Element g : fr.l_plus[y]) {
            a[{f, g}] = fr.to_i[fr.sp.plus[xy]];
            b[{f, g}] = fr.to_lambda[fr.sp.star[xy]];
          }
        }
      }
    }
    return in;
  }

  Report validate_structure_input(StructureInput const& in) {
    auto const& sk = in.skeleton;
    Report      r  = check_skeleton(sk);
    std::vector<std::string> const later{"maps_well_formed", "condition_1",
                                         "condition_2", "condition_3",
                                         "condition_4", "condition_5"};
    if (!r.all_passed()) {
      for (auto const& name : later) {
        r.not_applicable(name, "skeleton prerequisites fail");
      }
      return r;
    }
    auto const        fr = make_frame(sk);
    auto const&       s0 = sk.s0;
    auto const&       bi = sk.i_band;
    auto const&       bl = sk.lambda_band;
    std::size_t const n0 = s0.size();

    // maps_well_formed
    {
      std::optional<Witness>     bad;
      std::string                why;
      for (Element x = 0; x < n0 && !bad; ++x) {
        for (Element y = 0; y < n0 && !bad; ++y) {
          Element const xy = s0(x, y);
          auto const&   lt = fr.l_plus[fr.sp.plus[xy]];
          auto const&   rt = fr.r_star[fr.sp.star[xy]];
          for (auto const* fam : {&in.alpha, &in.beta}) {
            auto it = fam->find({x, y});
            if (it == fam->end()
                || it->second.size()
                       != fr.r_star[x].size() * fr.l_plus[y].size()) {
              bad = Witness{x, y};
              why = "map for (x,y) missing or not defined on R_{x*} x L_{y+}";
              break;
            }
            for (auto const& [fg, v] : it->second) {
              bool const in_domain = contains(fr.r_star[x], fg.first)
                                     && contains(fr.l_plus[y], fg.second);
              bool const in_target
                  = fam == &in.alpha ? contains(lt, v) : contains(rt, v);
              if (!in_domain || !in_target) {
                bad = Witness{x, y, fg.first, fg.second};
                why = in_domain ? "value outside the target class"
                                : "argument outside the domain";
                break;
              }
            }
            if (bad) {
              break;
            }
          }
        }
      }
      if (!bad && (in.alpha.size() != n0 * n0 || in.beta.size() != n0 * n0)) {
        bad = Witness{};
        why = "maps indexed outside S0 x S0";
      }
      if (bad) {
        r.fail("maps_well_formed", why + " at " + join(*bad), *bad);
        for (std::size_t i = 1; i < later.size(); ++i) {
          r.not_applicable(later[i], "maps are not well formed");
        }
        return r;
      }
      r.add("maps_well_formed");
    }

    auto a = [&](Element x, Element y, Element f, Element g) {
      return lookup(in.alpha, x, y, f, g);
    };
    auto b = [&](Element x, Element y, Element f, Element g) {
      return lookup(in.beta, x, y, f, g);
    };
    auto opt = [](auto const& band, std::optional<Element> p,
                  std::optional<Element> q) -> std::optional<Element> {
      if (!p || !q) {
        return std::nullopt;
      }
      return band(*p, *q);
    };
    auto fail_with = [&r](std::string name, Witness w, std::string what) {
      r.fail(std::move(name), what + " at " + join(w), std::move(w));
    };

    // condition 1
    [&] {
      for (Element x = 0; x < n0; ++x) {
        for (Element y = 0; y < n0; ++y) {
          for (Element z = 0; z < n0; ++z) {
            Element const xy = s0(x, y), yz = s0(y, z);
            for (Element f : fr.r_star[x]) {
              for (Element g : fr.l_plus[y]) {
                for (Element h : fr.r_star[y]) {
                  for (Element k : fr.l_plus[z]) {
                    auto const bh  = opt(bl, b(x, y, f, g), h);
                    auto const gak = opt(bi, g, a(y, z, h, k));
                    std::optional<Element> lhs_a, rhs_a, lhs_b, rhs_b;
                    if (bh && gak) {
                      lhs_a = opt(bi, a(x, y, f, g), a(xy, z, *bh, k));
                      rhs_a = a(x, yz, f, *gak);
                      lhs_b = opt(bl, b(x, yz, f, *gak), b(y, z, h, k));
                      rhs_b = b(xy, z, *bh, k);
                    }
                    if (!lhs_a || !rhs_a || *lhs_a != *rhs_a) {
                      fail_with("condition_1", {x, y, z, f, g, h, k, 0},
                                "alpha cocycle equation fails");
                      return;
                    }
                    if (!lhs_b || !rhs_b || *lhs_b != *rhs_b) {
                      fail_with("condition_1", {x, y, z, f, g, h, k, 1},
                                "beta cocycle equation fails");
                      return;
                    }
                  }
                }
              }
            }
          }
        }
      }
      r.add("condition_1");
    }();

    // condition 2
    [&] {
      for (Element x = 0; x < n0; ++x) {
        for (Element y = 0; y < n0; ++y) {
          Element const xy = s0(x, y);
          Element const f  = fr.to_lambda[fr.sp.star[x]];
          Element const g  = fr.to_i[fr.sp.plus[y]];
          if (a(x, y, f, g) != fr.to_i[fr.sp.plus[xy]]
              || b(x, y, f, g) != fr.to_lambda[fr.sp.star[xy]]) {
            fail_with("condition_2", {x, y},
                      "alpha(x*,y+) != (xy)+ or beta(x*,y+) != (xy)*");
            return;
          }
        }
      }
      r.add("condition_2");
    }();

    // condition 3
    [&] {
      for (Element x = 0; x < n0; ++x) {
        Element const xp = fr.sp.plus[x];
        Element const xs = fr.to_lambda[fr.sp.star[x]];
        for (Element x1 = 0; x1 < n0; ++x1) {
          for (Element x2 = 0; x2 < n0; ++x2) {
            if (s0(x1, x) != s0(x2, x)) {
              continue;
            }
            for (Element e : fr.l_plus[x]) {
              for (Element e1 : fr.l_plus[x1]) {
                for (Element f1 : fr.r_star[x1]) {
                  for (Element e2 : fr.l_plus[x2]) {
                    for (Element f2 : fr.r_star[x2]) {
                      bool const hyp
                          = opt(bi, e1, a(x1, x, f1, e))
                                == opt(bi, e2, a(x2, x, f2, e))
                            && opt(bl, b(x1, x, f1, e), xs)
                                   == opt(bl, b(x2, x, f2, e), xs);
                      if (!hyp) {
                        continue;
                      }
                      bool const concl
                          = opt(bi, e1, a(x1, xp, f1, e))
                                == opt(bi, e2, a(x2, xp, f2, e))
                            && s0(x1, xp) == s0(x2, xp)
                            && b(x1, xp, f1, e) == b(x2, xp, f2, e);
                      if (!concl) {
                        fail_with("condition_3", {x, x1, x2, e1, f1, e2, f2, e},
                                  "hypothesis holds but conclusion fails");
                        return;
                      }
                    }
                  }
                }
              }
            }
          }
        }
      }
      r.add("condition_3");
    }();

    // condition 4
    [&] {
      for (Element x = 0; x < n0; ++x) {
        Element const xp = fr.to_i[fr.sp.plus[x]];
        Element const xs = fr.sp.star[x];
        for (Element x1 = 0; x1 < n0; ++x1) {
          for (Element x2 = 0; x2 < n0; ++x2) {
            if (s0(x, x1) != s0(x, x2)) {
              continue;
            }
            for (Element f : fr.r_star[x]) {
              for (Element e1 : fr.l_plus[x1]) {
                for (Element f1 : fr.r_star[x1]) {
                  for (Element e2 : fr.l_plus[x2]) {
                    for (Element f2 : fr.r_star[x2]) {
                      bool const hyp
                          = opt(bi, xp, a(x, x1, f, e1))
                                == opt(bi, xp, a(x, x2, f, e2))
                            && opt(bl, b(x, x1, f, e1), f1)
                                   == opt(bl, b(x, x2, f, e2), f2);
                      if (!hyp) {
                        continue;
                      }
                      bool const concl
                          = a(xs, x1, f, e1) == a(xs, x2, f, e2)
                            && s0(xs, x1) == s0(xs, x2)
                            && opt(bl, b(xs, x1, f, e1), f1)
                                   == opt(bl, b(xs, x2, f, e2), f2);
                      if (!concl) {
                        fail_with("condition_4", {x, x1, x2, e1, f1, e2, f2, f},
                                  "hypothesis holds but conclusion fails");
                        return;
                      }
                    }
                  }
                }
              }
            }
          }
        }
      }
      r.add("condition_4");
    }();

    // condition 5
    [&] {
      for (Element f = 0; f < bl.size(); ++f) {
        for (Element e = 0; e < bi.size(); ++e) {
          Element const f0 = fr.lambda_root[f];
          Element const e0 = fr.i_root[e];
          if (a(f0, e0, fr.to_lambda[f0], e) != bi(fr.to_i[f0], e)) {
            fail_with("condition_5", {f, e, 0}, "alpha(f0,e) != f0 e");
            return;
          }
          if (b(f0, e0, f, fr.to_i[e0]) != bl(f, fr.to_lambda[e0])) {
            fail_with("condition_5", {f, e, 1}, "beta(f,e0) != f e0");
            return;
          }
        }
      }
      r.add("condition_5");
    }();
    return r;
  }

  bool structure_axioms_hold(Report const& r) {
    for (auto const& c : r.checks()) {
      if (c.name != "condition_5" && !(c.passed || !c.applicable)) {
        return false;
      }
    }
    return r.find("condition_4") != nullptr
           && r.find("condition_4")->applicable;
  }

  char const* to_string(BuildKind k) {
    switch (k) {
      case BuildKind::General:
        return "general";
      case BuildKind::QuasiIdeal:
        return "quasi-ideal";
      case BuildKind::Spined:
        return "spined";
      case BuildKind::Semidirect:
        return "semidirect";
    }
    return "unknown";
  }

  std::optional<Element>
  BuiltSemigroup::index_of(std::vector<Element> const& tuple) const {
    auto it = std::find(legend.begin(), legend.end(), tuple);
    if (it == legend.end()) {
      return std::nullopt;
    }
    return static_cast<Element>(it - legend.begin());
  }

  BuiltSemigroup build_w(StructureInput const& in) {
    auto const report = validate_structure_input(in);
    if (!structure_axioms_hold(report)) {
      auto const* c = first_failed(report);
      throw Error(ErrorCode::AxiomViolation,
                  c->name + ": " + c->detail,
                  c->witness);
    }
    bool const  cond5 = report.passed("condition_5");
    auto const& sk    = in.skeleton;
    auto const  fr    = make_frame(sk);
    auto const& s0    = sk.s0;
    std::size_t const n0 = s0.size();

    BuiltSemigroup b;
    b.kind = BuildKind::General;
    b.s0   = s0;
    std::vector<std::string> labels;
    std::size_t              expected = 0;
    for (Element x = 0; x < n0; ++x) {
      expected += fr.l_plus[x].size() * fr.r_star[x].size();
      for (Element e : fr.l_plus[x]) {
        for (Element f : fr.r_star[x]) {
          b.legend.push_back({e, x, f});
          labels.push_back(tuple_label(
              {sk.i_band.label(e), s0.label(x), sk.lambda_band.label(f)}));
        }
      }
    }
    std::size_t const n = b.legend.size();
    std::vector<std::vector<Element>> rows(n, std::vector<Element>(n));
    for (Element p = 0; p < n; ++p) {
      Element const e = b.legend[p][0], x = b.legend[p][1], f = b.legend[p][2];
      for (Element q = 0; q < n; ++q) {
        Element const g = b.legend[q][0], y = b.legend[q][1], h = b.legend[q][2];
        Element const a  = in.alpha.at({x, y}).at({f, g});
        Element const be = in.beta.at({x, y}).at({f, g});
        auto const    idx = b.index_of(
            {sk.i_band(e, a), s0(x, y), sk.lambda_band(be, h)});
        if (!idx) {
          postcondition("W is not closed under the product at "
                        + std::to_string(p) + "," + std::to_string(q));
        }
        rows[p][q] = *idx;
      }
    }
    b.w = table_from(rows, labels, "build_w");
    for (Element x = 0; x < n0; ++x) {
      b.s0_embedding.push_back(*b.index_of({fr.to_i[fr.sp.plus[x]], x,
                                            fr.to_lambda[fr.sp.star[x]]}));
    }
    b.w0 = b.s0_embedding;
    std::sort(b.w0.begin(), b.w0.end());
    verify_common(b);

    auto& r = b.checks;
    if (n == expected) {
      r.add("w.order");
    } else {
      r.fail("w.order", "unexpected number of elements");
    }
    {
      bool ok = true;
      for (Element p = 0; p < n; ++p) {
        ok = ok
             && b.w.is_idempotent(p)
                    == s0.is_idempotent(b.legend[p][1]);
      }
      if (ok) {
        r.add("w.idempotents");
      } else {
        r.fail("w.idempotents", "E(W) is not {(e,x,f) : x in E0}");
      }
    }
    if (r.passed("w0.adequate_transversal")) {
      auto const& d  = b.decomposition;
      bool        ok = true;
      for (Element p = 0; p < n && ok; ++p) {
        Element const e = b.legend[p][0], x = b.legend[p][1], f = b.legend[p][2];
        Element const xp = fr.sp.plus[x], xs = fr.sp.star[x];
        ok = d.e_of[p] == b.index_of({e, xp, fr.to_lambda[xp]})
             && d.bar_of[p]
                    == b.index_of({fr.to_i[xp], x, fr.to_lambda[xs]})
             && d.f_of[p] == b.index_of({fr.to_i[xs], xs, f});
      }
      if (ok) {
        r.add("w.decomposition_maps");
      } else {
        r.fail("w.decomposition_maps",
               "e, bar, f are not (e,x+,x+), (x+,x,x*), (x*,x*,f)");
      }
      if (cond5) {
        check_band_copy(r, "w.i_isomorphic", b.w, d.i_set, sk.i_band);
        check_band_copy(r, "w.lambda_isomorphic", b.w, d.lambda_set,
                        sk.lambda_band);
      } else {
        r.not_applicable("w.band_copies", "condition 5 fails");
      }
    }
    require_all(r, "build_w");
    return b;
  }

  BuiltSemigroup build_quasi_ideal_w(StructureSkeleton const& sk) {
    auto const bi = band_class(sk.i_band);
    auto const bl = band_class(sk.lambda_band);
    if (!bi.is_left_normal) {
      throw Error(ErrorCode::BandNotNormal, "I is not a left normal band");
    }
    if (!bl.is_right_normal) {
      throw Error(ErrorCode::BandNotNormal, "Lambda is not a right normal band");
    }
    StructureFrame fr;
    try {
      fr = make_frame(sk);
    } catch (Error const& e) {
      if (e.code() == ErrorCode::NotAdequate) {
        throw;
      }
      throw Error(ErrorCode::TransversalInvalid, e.what());
    }
    // E0 must be a quasi-ideal of both bands.
    for (Element c : fr.e0) {
      for (Element d : fr.e0) {
        for (Element e = 0; e < sk.i_band.size(); ++e) {
          Element v = sk.i_band(sk.i_band(fr.to_i[c], e), fr.to_i[d]);
          if (fr.i_root[v] >= sk.s0.size() || fr.to_i[fr.i_root[v]] != v) {
            throw Error(ErrorCode::TransversalInvalid,
                        "E0 is not a quasi-ideal of I",
                        {c, e, d});
          }
        }
        for (Element f = 0; f < sk.lambda_band.size(); ++f) {
          Element v = sk.lambda_band(sk.lambda_band(fr.to_lambda[c], f),
                                     fr.to_lambda[d]);
          if (fr.to_lambda[fr.lambda_root[v]] != v) {
            throw Error(ErrorCode::TransversalInvalid,
                        "E0 is not a quasi-ideal of Lambda",
                        {c, f, d});
          }
        }
      }
    }

    auto const&       s0 = sk.s0;
    std::size_t const n0 = s0.size();
    BuiltSemigroup    b;
    b.kind = BuildKind::QuasiIdeal;
    b.s0   = s0;
    std::vector<std::string> labels;
    for (Element x = 0; x < n0; ++x) {
      for (Element e : fr.l_plus[x]) {
        for (Element f : fr.r_star[x]) {
          b.legend.push_back({e, x, f});
          labels.push_back(tuple_label(
              {sk.i_band.label(e), s0.label(x), sk.lambda_band.label(f)}));
        }
      }
    }
    std::size_t const n = b.legend.size();
    std::vector<std::vector<Element>> rows(n, std::vector<Element>(n));
    for (Element p = 0; p < n; ++p) {
      for (Element q = 0; q < n; ++q) {
        Element const e = b.legend[p][0], x = b.legend[p][1];
        Element const y = b.legend[q][1], h = b.legend[q][2];
        Element const xy  = s0(x, y);
        auto const    idx = b.index_of(
            {sk.i_band(e, fr.to_i[fr.sp.plus[xy]]), xy,
             sk.lambda_band(fr.to_lambda[fr.sp.star[xy]], h)});
        if (!idx) {
          postcondition("quasi-ideal W is not closed");
        }
        rows[p][q] = *idx;
      }
    }
    b.w = table_from(rows, labels, "build_quasi_ideal_w");
    for (Element x = 0; x < n0; ++x) {
      b.s0_embedding.push_back(*b.index_of({fr.to_i[fr.sp.plus[x]], x,
                                            fr.to_lambda[fr.sp.star[x]]}));
    }
    b.w0 = b.s0_embedding;
    std::sort(b.w0.begin(), b.w0.end());
    auto const profile = verify_common(b);
    auto&      r       = b.checks;
    if (r.passed("w0.adequate_transversal")) {
      if (profile.is_quasi_ideal) {
        r.add("w0.quasi_ideal");
      } else {
        r.fail("w0.quasi_ideal", "W0 is not a quasi-ideal of W");
      }
      if (profile.is_multiplicative) {
        r.add("w0.multiplicative");
      } else {
        r.fail("w0.multiplicative", "W0 is not multiplicative");
      }
    }
    try {
      auto const general = build_w(canonical_structure_input(sk));
      if (general.legend == b.legend && general.w == b.w) {
        r.add("w.agrees_with_general");
      } else {
        r.fail("w.agrees_with_general", "tables differ");
      }
    } catch (Error const& e) {
      r.fail("w.agrees_with_general", e.what(), e.witness());
    }
    require_all(r, "build_quasi_ideal_w");
    return b;
  }

  BuiltSemigroup
  build_spined_product(SpinedFactor const&                              l,
                       SpinedFactor const&                              r,
                       std::optional<std::map<Element, Element>> const& ident) {
    if (!abundance_profile(l.semigroup).is_left_adequate) {
      throw Error(ErrorCode::NotLeftAdequate, "L is not left adequate");
    }
    if (!abundance_profile(r.semigroup).is_right_adequate) {
      throw Error(ErrorCode::NotRightAdequate, "R is not right adequate");
    }
    auto const dl = verify_adequate_transversal(l.semigroup, l.s0);
    auto const dr = verify_adequate_transversal(r.semigroup, r.s0);
    if (!transversal_profile(l.semigroup, dl).is_quasi_ideal
        || !transversal_profile(r.semigroup, dr).is_quasi_ideal) {
      throw Error(ErrorCode::NotQuasiIdeal,
                  "transversal is not a quasi-ideal of its factor");
    }
    auto const sl = restrict_to(l.semigroup, dl.s0);
    auto const sr = restrict_to(r.semigroup, dr.s0);
    ElementMap iota_local;
    if (ident) {
      iota_local.assign(sl.semigroup.size(), 0);
      if (ident->size() != dl.s0.size()) {
        throw Error(ErrorCode::TransversalMismatch,
                    "identification is not defined on the transversal");
      }
      for (auto const [x, a] : *ident) {
        if (!dl.in_s0(x) || !dr.in_s0(a)) {
          throw Error(ErrorCode::TransversalMismatch,
                      "identification leaves the transversals",
                      {x, a});
        }
        iota_local[sl.local(x)] = sr.local(a);
      }
      if (!is_isomorphism(sl.semigroup, sr.semigroup, iota_local)) {
        throw Error(ErrorCode::TransversalMismatch,
                    "identification is not an isomorphism");
      }
    } else {
      auto phi = find_isomorphism(sl.semigroup, sr.semigroup);
      if (!phi) {
        throw Error(ErrorCode::TransversalMismatch,
                    "the transversals are not isomorphic");
      }
      iota_local = *phi;
    }
    auto iota = [&](Element x) {
      return sr.to_parent[iota_local[sl.local(x)]];
    };

    auto const&    ls = l.semigroup;
    auto const&    rs = r.semigroup;
    BuiltSemigroup b;
    b.kind = BuildKind::Spined;
    b.s0   = sl.semigroup;
    std::vector<std::string> labels;
    for (Element x = 0; x < ls.size(); ++x) {
      for (Element a = 0; a < rs.size(); ++a) {
        if (iota(dl.bar_of[x]) == dr.bar_of[a]) {
          b.legend.push_back({x, a});
          labels.push_back(tuple_label({ls.label(x), rs.label(a)}));
        }
      }
    }
    std::size_t const n = b.legend.size();
    std::vector<std::vector<Element>> rows(n, std::vector<Element>(n));
    for (Element p = 0; p < n; ++p) {
      for (Element q = 0; q < n; ++q) {
        Element const x = b.legend[p][0], a = b.legend[p][1];
        Element const y = b.legend[q][0], bb = b.legend[q][1];
        auto const    idx
            = b.index_of({ls(x, dl.bar_of[y]), rs(dr.bar_of[a], bb)});
        if (!idx) {
          postcondition("spined product is not closed");
        }
        rows[p][q] = *idx;
      }
    }
    b.w = table_from(rows, labels, "build_spined_product");
    for (Element x : sl.to_parent) {
      b.s0_embedding.push_back(*b.index_of({x, iota(x)}));
    }
    b.w0 = b.s0_embedding;
    std::sort(b.w0.begin(), b.w0.end());
    auto const profile = verify_common(b);
    if (b.checks.passed("w0.adequate_transversal")) {
      if (profile.is_quasi_ideal) {
        b.checks.add("w0.quasi_ideal");
      } else {
        b.checks.fail("w0.quasi_ideal", "W0 is not a quasi-ideal of W");
      }
    }
    require_all(b.checks, "build_spined_product");
    return b;
  }

  namespace {
    StructureSkeleton action_skeleton(ActionTable const& in) {
      StructureSkeleton sk;
      sk.s0          = in.s0;
      sk.i_band      = in.i_band;
      auto const e0  = in.s0.idempotents();
      sk.lambda_band = idempotent_semilattice(in.s0);
      sk.e0_in_i     = in.e0_in_i;
      for (std::size_t i = 0; i < e0.size(); ++i) {
        sk.e0_in_lambda[e0[i]] = i;
      }
      return sk;
    }
  }  // namespace

  Report validate_action_table(ActionTable const& in) {
    Report     r;
    auto const sk = action_skeleton(in);
    r.append(check_skeleton(sk));
    bool const ample
        = r.passed("prerequisites.s0_adequate")
          && abundance_profile(in.s0).is_left_ample;
    if (ample) {
      r.add("prerequisites.s0_left_ample");
    } else {
      r.fail("prerequisites.s0_left_ample", "S0 is not left ample");
    }
    std::vector<std::string> const later{
        "action_total", "action.composition", "action.distributive",
        "condition_1",  "condition_2",        "condition_3"};
    if (!r.all_passed()) {
      for (auto const& name : later) {
        r.not_applicable(name, "prerequisites fail");
      }
      return r;
    }
    auto const&       s0 = in.s0;
    auto const&       bi = in.i_band;
    auto const&       act = in.act;
    std::size_t const n0 = s0.size(), ni = bi.size();
    bool total = act.size() == n0;
    for (std::size_t x = 0; x < n0 && total; ++x) {
      total = act[x].size() == ni;
      for (std::size_t e = 0; e < ni && total; ++e) {
        total = act[x][e] < ni;
      }
    }
    if (!total) {
      r.fail("action_total", "act is not a total map S0 x I -> I");
      for (std::size_t i = 1; i < later.size(); ++i) {
        r.not_applicable(later[i], "act is not total");
      }
      return r;
    }
    r.add("action_total");
    auto const fr = make_frame(sk);
    auto fail_with = [&r](std::string name, Witness w, std::string what) {
      r.fail(std::move(name), what + " at " + join(w), std::move(w));
    };

    [&] {
      for (Element x = 0; x < n0; ++x) {
        for (Element y = 0; y < n0; ++y) {
          for (Element e = 0; e < ni; ++e) {
            if (act[s0(x, y)][e] != act[x][act[y][e]]) {
              fail_with("action.composition", {1, x, y, e},
                        "(xy)*e != x*(y*e)");
              return;
            }
          }
        }
      }
      r.add("action.composition");
    }();
    [&] {
      for (Element x = 0; x < n0; ++x) {
        for (Element e = 0; e < ni; ++e) {
          for (Element f = 0; f < ni; ++f) {
            if (act[x][bi(e, f)] != bi(act[x][e], act[x][f])) {
              fail_with("action.distributive", {2, x, e, f},
                        "x*(ef) != (x*e)(x*f)");
              return;
            }
          }
        }
      }
      r.add("action.distributive");
    }();
    [&] {
      for (Element x = 0; x < n0; ++x) {
        for (Element y = 0; y < n0; ++y) {
          if (act[x][fr.to_i[fr.sp.plus[y]]]
              != fr.to_i[fr.sp.plus[s0(x, y)]]) {
            fail_with("condition_1", {x, y}, "x*y+ != (xy)+");
            return;
          }
        }
      }
      r.add("condition_1");
    }();
    [&] {
      for (Element x = 0; x < n0; ++x) {
        Element const xp = fr.to_i[fr.sp.plus[x]];
        Element const xs = fr.sp.star[x];
        for (Element x1 = 0; x1 < n0; ++x1) {
          for (Element x2 = 0; x2 < n0; ++x2) {
            if (s0(x, x1) != s0(x, x2)) {
              continue;
            }
            for (Element e1 : fr.l_plus[x1]) {
              for (Element e2 : fr.l_plus[x2]) {
                if (bi(xp, act[x][e1]) != bi(xp, act[x][e2])) {
                  continue;
                }
                if (act[xs][e1] != act[xs][e2] || s0(xs, x1) != s0(xs, x2)) {
                  fail_with("condition_2", {x, x1, x2, e1, e2},
                            "hypothesis holds but conclusion fails");
                  return;
                }
              }
            }
          }
        }
      }
      r.add("condition_2");
    }();
    [&] {
      for (Element x = 0; x < n0; ++x) {
        Element const xp = fr.sp.plus[x];
        for (Element e = 0; e < ni; ++e) {
          if (act[xp][e] != bi(fr.to_i[xp], e)) {
            fail_with("condition_3", {x, e}, "x+*e != x+e");
            return;
          }
        }
      }
      r.add("condition_3");
    }();
    return r;
  }

  StructureInput structure_input_from_action(ActionTable const& in) {
    auto const     sk = action_skeleton(in);
    auto const     fr = make_frame(sk);
    StructureInput out{sk, {}, {}};
    std::size_t const n0 = in.s0.size();
    for (Element x = 0; x < n0; ++x) {
      for (Element y = 0; y < n0; ++y) {
        Element const xy = in.s0(x, y);
        auto&         a  = out.alpha[{x, y}];
        auto&         b  = out.beta[{x, y}];
        for (Element f : fr.r_star[x]) {
          for (Element g : fr.l_plus[y]) {
            a[{f, g}] = in.act[x][g];
            b[{f, g}] = fr.to_lambda[fr.sp.star[xy]];
          }
        }
      }
    }
    return out;
  }

  BuiltSemigroup build_semidirect(ActionTable const& in) {
    auto const report = validate_action_table(in);
    if (auto const* c = first_failed(report)) {
      ErrorCode code = ErrorCode::ConditionViolation;
      Witness   w    = c->witness;
      if (c->name == "prerequisites.s0_adequate") {
        code = ErrorCode::NotAdequate;
      } else if (c->name == "prerequisites.s0_left_ample") {
        code = ErrorCode::NotLeftAmple;
      } else if (c->name == "prerequisites.i_left_regular"
                 || c->name == "prerequisites.lambda_right_regular") {
        code = ErrorCode::NotABand;
      } else if (c->name.starts_with("prerequisites.")) {
        code = ErrorCode::TransversalInvalid;
      } else if (c->name.starts_with("action")) {
        code = ErrorCode::ActionLawViolation;
      } else {
        w.insert(w.begin(), static_cast<std::size_t>(c->name.back() - '0'));
      }
      throw Error(code, c->name + ": " + c->detail, w);
    }
    bool const  cond3 = report.passed("condition_3");
    auto const  sk    = action_skeleton(in);
    auto const  fr    = make_frame(sk);
    auto const& s0    = in.s0;
    auto const& bi    = in.i_band;
    std::size_t const n0 = s0.size(), ni = bi.size();

    // the ambient semidirect product on all of I x S0, index x * |I| + e
    std::vector<std::vector<Element>> ambient(n0 * ni,
                                              std::vector<Element>(n0 * ni));
    for (Element x = 0; x < n0; ++x) {
      for (Element e = 0; e < ni; ++e) {
        for (Element y = 0; y < n0; ++y) {
          for (Element g = 0; g < ni; ++g) {
            ambient[x * ni + e][y * ni + g]
                = s0(x, y) * ni + bi(e, in.act[x][g]);
          }
        }
      }
    }
    auto const full = table_from(ambient, {}, "build_semidirect");
    ElementSet carrier;
    for (Element x = 0; x < n0; ++x) {
      for (Element e : fr.l_plus[x]) {
        carrier.push_back(x * ni + e);
      }
    }
    if (!is_closed(full, carrier)) {
      postcondition("{(e,x) : e in L_{x+}} is not closed");
    }
    auto const     sub = restrict_to(full, carrier);
    BuiltSemigroup b;
    b.kind = BuildKind::Semidirect;
    b.s0   = s0;
    std::vector<std::string> labels;
    for (Element p : carrier) {
      Element const x = p / ni, e = p % ni;
      b.legend.push_back({e, x});
      labels.push_back(tuple_label({bi.label(e), s0.label(x)}));
    }
    b.w = sub.semigroup.with_labels(labels);
    for (Element x = 0; x < n0; ++x) {
      b.s0_embedding.push_back(*b.index_of({fr.to_i[fr.sp.plus[x]], x}));
    }
    b.w0 = b.s0_embedding;
    std::sort(b.w0.begin(), b.w0.end());
    verify_common(b);

    auto&      r  = b.checks;
    auto const ap = abundance_profile(b.w);
    if (ap.is_left_adequate) {
      r.add("w.left_adequate");
    } else {
      r.fail("w.left_adequate", "W is not left adequate");
    }
    if (abundance_profile(restrict_to(b.w, b.w0).semigroup).is_left_ample) {
      r.add("w0.left_ample");
    } else {
      r.fail("w0.left_ample", "W0 is not left ample");
    }
    {
      bool ok = true;
      for (Element p = 0; p < b.w.size(); ++p) {
        ok = ok && b.w.is_idempotent(p) == s0.is_idempotent(b.legend[p][1]);
      }
      if (ok) {
        r.add("w.idempotents");
      } else {
        r.fail("w.idempotents", "E(W) is not {(e,x) : x in E0}");
      }
    }
    {
      auto const star = star_relations(b.w);
      bool       ok   = true;
      for (auto const& cls : star.rstar.classes()) {
        std::size_t count = 0;
        for (Element p : cls) {
          count += b.w.is_idempotent(p);
        }
        ok = ok && count == 1;
      }
      if (ok) {
        r.add("w.rstar_unique_idempotent");
      } else {
        r.fail("w.rstar_unique_idempotent",
               "some R*-class has no or several idempotents");
      }
    }
    try {
      auto const general = build_w(structure_input_from_action(in));
      bool       same    = general.w.size() == b.w.size();
      for (Element p = 0; same && p < b.w.size(); ++p) {
        same = general.legend[p][0] == b.legend[p][0]
               && general.legend[p][1] == b.legend[p][1];
      }
      same = same && general.w.flat_table() == b.w.flat_table();
      if (same) {
        r.add("w.agrees_with_general");
      } else {
        r.fail("w.agrees_with_general", "tables differ");
      }
    } catch (Error const& e) {
      r.fail("w.agrees_with_general", e.what(), e.witness());
    }
    if (cond3 && r.passed("w0.adequate_transversal")) {
      check_band_copy(r, "w.i_isomorphic", b.w, b.decomposition.i_set, bi);
    } else {
      r.not_applicable("w.i_isomorphic", "condition 3 fails");
    }
    require_all(r, "build_semidirect");
    return b;
  }

  Report check_inverse_specialization(BuiltSemigroup const& b) {
    Report     r;
    auto const s0p = abundance_profile(b.s0);
    auto const wp  = abundance_profile(b.w);
    r.add("s0.inverse").detail = s0p.is_inverse ? "S0 is inverse"
                                                : "S0 is not inverse";
    if (wp.is_orthodox == s0p.is_inverse) {
      r.add("orthodox_iff_s0_inverse");
    } else {
      r.fail("orthodox_iff_s0_inverse",
             std::string("W orthodox=") + (wp.is_orthodox ? "T" : "F")
                 + " S0 inverse=" + (s0p.is_inverse ? "T" : "F"));
    }
    if (!s0p.is_inverse) {
      r.not_applicable("inverse_specialization", "S0 is not inverse");
      return r;
    }
    if (b.kind == BuildKind::Semidirect) {
      bool const lrb = band_class(restrict_to(b.w, b.w.idempotents()).semigroup)
                           .is_left_regular;
      if (wp.is_regular && wp.is_quasi_adequate && lrb) {
        r.add("w.left_inverse");
      } else {
        r.fail("w.left_inverse", "W is not a left inverse semigroup");
      }
    } else {
      if (wp.is_orthodox) {
        r.add("w.orthodox");
      } else {
        r.fail("w.orthodox", "W is not orthodox");
      }
    }
    auto const reg = regular_and_inverses(b.w);
    for (Element x = 0; x < b.w.size(); ++x) {
      std::size_t count = 0;
      for (Element y : reg.inverses[x]) {
        count += contains(b.w0, y);
      }
      if (count != 1) {
        r.fail("w0.inverse_transversal",
               "|V(x) meet W0| = " + std::to_string(count),
               {x});
        return r;
      }
    }
    r.add("w0.inverse_transversal");
    return r;
  }

}  // namespace sgt
