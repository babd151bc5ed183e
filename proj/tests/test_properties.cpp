// Invariants checked over the census and the catalog.
#include "doctest.h"
#include "oracles.hpp"
#include "sgt/constructions.hpp"
#include "sgt/decomposer.hpp"
#include "sgt/green.hpp"
#include "sgt/transversal.hpp"
#include "support.hpp"

using namespace testing;
using sgt::Partition;

namespace {

  std::vector<Instance> const& small() {
    static auto const all = corpus(3);
    return all;
  }

  std::vector<Instance> const& medium() {
    static auto const all = corpus(4);
    return all;
  }

}  // namespace

TEST_CASE("quotient by the identity congruence is isomorphic to S") {
  for (auto const& [name, s] : small()) {
    auto const q = sgt::quotient(s, Partition::identity(s.size()));
    CHECK(sgt::find_isomorphism(s, q.semigroup));
  }
}

TEST_CASE("generated_subsemigroup is idempotent on closed sets") {
  for (auto const& [name, s] : small()) {
    for (auto const& u : sgt::enumerate_subsemigroups(s)) {
      CHECK(sgt::generated_subsemigroup(s, u) == u);
    }
  }
}

TEST_CASE("band flags respect their implications") {
  for (auto const& [name, s] : medium()) {
    CAPTURE(name);
    auto const b = sgt::band_class(s);
    if (b.is_semilattice) {
      CHECK(b.is_left_normal);
      CHECK(b.is_right_normal);
    }
    if (b.is_left_zero) {
      CHECK(b.is_rectangular);
      CHECK(b.is_left_normal);
    }
    if (b.is_right_zero) {
      CHECK(b.is_rectangular);
      CHECK(b.is_right_normal);
    }
    if (b.is_left_normal) {
      CHECK(b.is_left_regular);
      CHECK(b.is_normal);
    }
    if (b.is_right_normal) {
      CHECK(b.is_right_regular);
      CHECK(b.is_normal);
    }
    bool const any = b.is_semilattice || b.is_left_zero || b.is_right_zero
                     || b.is_rectangular || b.is_left_regular || b.is_right_regular
                     || b.is_left_normal || b.is_right_normal || b.is_normal;
    if (any) {
      CHECK(b.is_band);
    }
  }
}

TEST_CASE("band J-classes are symmetric and match the oracle") {
  for (auto const& [name, s] : medium()) {
    if (!sgt::band_class(s).is_band) {
      continue;
    }
    CAPTURE(name);
    auto const j = oracle::band_j(s);
    for (Element e = 0; e < s.size(); ++e) {
      auto const c = sgt::band_j_class(s, e);
      for (Element f = 0; f < s.size(); ++f) {
        bool const in = std::binary_search(c.begin(), c.end(), f);
        CHECK(in == j[e][f]);
        auto const d = sgt::band_j_class(s, f);
        CHECK(in == std::binary_search(d.begin(), d.end(), e));
      }
    }
  }
}

TEST_CASE("enumerate_congruences matches the pair-closure oracle") {
  for (auto const& [name, s] : medium()) {
    CAPTURE(name);
    if (s.size() > 7) {
      continue;
    }
    std::set<std::vector<std::size_t>> lib;
    for (auto const& p : sgt::enumerate_congruences(s)) {
      CHECK(sgt::is_congruence(s, p));
      lib.insert(p.class_ids());
    }
    CHECK(lib == oracle::congruences(s));
  }
}

TEST_CASE("R* is a left congruence and L* a right congruence") {
  for (auto const& [name, s] : medium()) {
    auto const sr = sgt::star_relations(s);
    for (Element a = 0; a < s.size(); ++a) {
      for (Element b = 0; b < s.size(); ++b) {
        for (Element c = 0; c < s.size(); ++c) {
          if (sr.rstar.same(a, b)) {
            CHECK(sr.rstar.same(s(c, a), s(c, b)));
          }
          if (sr.lstar.same(a, b)) {
            CHECK(sr.lstar.same(s(a, c), s(b, c)));
          }
        }
      }
    }
  }
}

TEST_CASE("starred relations on regular elements are Green's relations") {
  for (auto const& [name, s] : medium()) {
    CAPTURE(name);
    auto const sr  = sgt::star_relations(s);
    auto const gr  = sgt::green_relations(s);
    auto const reg = sgt::regular_and_inverses(s);
    for (Element a : reg.regular) {
      for (Element b : reg.regular) {
        CHECK(sr.rstar.same(a, b) == gr.r.same(a, b));
        CHECK(sr.lstar.same(a, b) == gr.l.same(a, b));
      }
    }
  }
}

TEST_CASE("e R* a iff ea = a and xa = ya implies xe = ye") {
  for (auto const& [name, s] : medium()) {
    CAPTURE(name);
    auto const        sr = sgt::star_relations(s);
    std::size_t const n  = s.size();
    for (Element e : s.idempotents()) {
      for (Element a = 0; a < n; ++a) {
        bool ok = s(e, a) == a;
        for (Element x = 0; x <= n && ok; ++x) {
          for (Element y = 0; y <= n && ok; ++y) {
            if (oracle::mul1(s, x, a) == oracle::mul1(s, y, a)) {
              ok = oracle::mul1(s, x, e) == oracle::mul1(s, y, e);
            }
          }
        }
        CHECK(ok == sr.rstar.same(e, a));
      }
    }
  }
}

TEST_CASE("star_plus determines R* and L* on adequate semigroups") {
  for (auto const& [name, s] : medium()) {
    if (!sgt::is_adequate(s)) {
      continue;
    }
    auto const sr = sgt::star_relations(s);
    auto const sp = sgt::star_plus(s);
    for (Element a = 0; a < s.size(); ++a) {
      for (Element b = 0; b < s.size(); ++b) {
        CHECK(sr.rstar.same(a, b) == (sp.plus[a] == sp.plus[b]));
        CHECK(sr.lstar.same(a, b) == (sp.star[a] == sp.star[b]));
      }
    }
  }
}

TEST_CASE("delta matches the literal oracle and behaves as claimed") {
  for (auto const& [name, s] : medium()) {
    if (!sgt::is_quasi_adequate(s)) {
      continue;
    }
    CAPTURE(name);
    auto const d = sgt::delta(s);
    auto const m = oracle::delta(s);
    for (Element a = 0; a < s.size(); ++a) {
      for (Element b = 0; b < s.size(); ++b) {
        CHECK(static_cast<bool>(d.related[a][b]) == m[a][b]);
      }
    }
    auto const p = sgt::abundance_profile(s);
    if (p.is_bountiful || sgt::band_class(sgt::restrict_to(s, s.idempotents()).semigroup).is_normal) {
      CHECK(d.is_congruence);
    }
    if (d.is_congruence) {
      CHECK(*d.partition == sgt::min_adequate_admissible_congruence(s));
    }
    for (auto const& rho : sgt::enumerate_congruences(s)) {
      if (oracle::adequate(oracle::quotient(s, rho.class_ids()))) {
        for (auto [a, b] : d.pairs) {
          CHECK(rho.same(a, b));
        }
      }
    }
  }
}

TEST_CASE("verify_adequate_transversal agrees with the brute-force oracle") {
  for (auto const& [name, s] : medium()) {
    CAPTURE(name);
    for (auto const& u : sgt::enumerate_subsemigroups(s)) {
      CAPTURE(u);
      auto const f = oracle::factorisations(s, u);
      bool const unique =
          f && std::all_of(f->begin(), f->end(), [](auto const& t) { return t.size() == 1; });
      try {
        auto const d = sgt::verify_adequate_transversal(s, u);
        REQUIRE(unique);
        for (Element x = 0; x < s.size(); ++x) {
          CHECK((*f)[x][0] == oracle::Triple{d.e_of[x], d.bar_of[x], d.f_of[x]});
        }
      } catch (sgt::Error const& e) {
        CHECK(e.code() != sgt::ErrorCode::InvariantBroken);
        CHECK(!unique);
      }
    }
  }
}

TEST_CASE("decomposition identities") {
  for (auto const& [name, s] : medium()) {
    auto const sr = sgt::star_relations(s);
    for (auto const& d : sgt::find_adequate_transversals(s)) {
      CAPTURE(name);
      CAPTURE(d.s0);
      for (Element x = 0; x < s.size(); ++x) {
        for (Element y = 0; y < s.size(); ++y) {
          CHECK(sr.rstar.same(x, y) == (d.e_of[x] == d.e_of[y]));
          CHECK(sr.lstar.same(x, y) == (d.f_of[x] == d.f_of[y]));
        }
      }
      for (Element x : d.i_set) {
        CHECK(d.e_of[x] == x);
        CHECK(d.bar_of[x] == d.f_of[x]);
        CHECK(d.f_of[x] == d.e_of[d.bar_of[x]]);
      }
      for (Element y : d.lambda_set) {
        CHECK(d.e_of[y] == d.bar_of[y]);
        CHECK(d.bar_of[y] == d.f_of[d.bar_of[y]]);
        CHECK(d.f_of[y] == y);
      }
      auto const audit = sgt::audit_identities(s, d);
      CHECK_MESSAGE(audit.all_passed(), audit.to_text());
      if (sgt::is_quasi_adequate(s)) {
        auto const p = sgt::transversal_profile(s, d);
        CHECK(p.is_multiplicative == p.is_quasi_ideal);
        CHECK(audit.passed("qa_prop.all_or_none"));
      }
    }
  }
}

TEST_CASE("roundtrips over the census") {
  for (auto const& [name, s] : medium()) {
    if (!sgt::is_quasi_adequate(s)) {
      continue;
    }
    for (auto const& d : sgt::find_adequate_transversals(s)) {
      if (!sgt::transversal_profile(s, d).is_admissible) {
        continue;
      }
      CAPTURE(name);
      CAPTURE(d.s0);
      auto const rt = sgt::roundtrip(s, d);
      CHECK_MESSAGE(rt.checks.all_passed(), rt.checks.to_text());
      auto const& w = rt.rebuilt;
      auto const  fr = sgt::make_frame(sgt::extract_structure(s, d).input.skeleton);
      std::size_t count = 0;
      for (Element x = 0; x < fr.sp.plus.size(); ++x) {
        count += fr.l_plus[x].size() * fr.r_star[x].size();
      }
      CHECK(w.w.size() == count);
      for (Element q = 0; q < w.w.size(); ++q) {
        auto const& t  = w.legend[q];
        Element const x = t[1], xp = fr.sp.plus[x], xs = fr.sp.star[x];
        auto const i = [&](auto... v) { return *w.index_of({v...}); };
        CHECK(w.decomposition.e_of[q] == i(t[0], xp, fr.to_lambda[xp]));
        CHECK(w.decomposition.bar_of[q] == i(fr.to_i[xp], x, fr.to_lambda[xs]));
        CHECK(w.decomposition.f_of[q] == i(fr.to_i[xs], xs, t[2]));
        bool const in_e0 = std::binary_search(fr.e0.begin(), fr.e0.end(), x);
        CHECK(w.w.is_idempotent(q) == in_e0);
      }
      if (rt.semidirect) {
        auto const& sd = *rt.semidirect;
        auto const  sp = sgt::star_relations(sd.w);
        for (Element q = 0; q < sd.w.size(); ++q) {
          std::size_t k = 0;
          for (Element e : sd.w.idempotents()) {
            k += sp.rstar.same(q, e);
          }
          CHECK(k == 1);
        }
      }
      if (rt.spined) {
        CHECK(sgt::find_isomorphism(rt.spined->w, rt.rebuilt.w));
      }
    }
  }
}

TEST_CASE("I Lambda = E(S) without closed idempotents") {
  auto const all = census_instances(5, 5);
  for (auto [k, u] : std::vector<std::pair<std::size_t, ElementSet>>{{680, {0, 1, 2, 4}},
                                                                      {812, {0, 1, 2, 3}}}) {
    auto const& s = all[k].s;
    CAPTURE(all[k].name);
    REQUIRE(oracle::abundant(s));
    CHECK(!oracle::quasi_adequate(s));
    auto const d = sgt::verify_adequate_transversal(s, u);
    std::set<Element> il;
    for (Element i : d.i_set) {
      for (Element l : d.lambda_set) {
        il.insert(s(i, l));
      }
    }
    auto const e = oracle::idempotents(s);
    CHECK(il == std::set<Element>(e.begin(), e.end()));
    auto const audit = sgt::audit_identities(s, d);
    auto const* c    = audit.find("qa_prop.all_or_none");
    REQUIRE(c);
    CHECK(!c->applicable);
    CHECK(c->detail.find("(4)=T") != std::string::npos);
  }
}

TEST_CASE("bar is not multiplicative on Lambda x I without closed idempotents") {
  auto const s = census_instances(5, 5)[680].s;
  auto const f = oracle::factorisations(s, {0, 1, 2, 4});
  REQUIRE(f);
  auto const bar = [&](Element x) { return (*f)[x][0].bar; };
  // 3 in Lambda, 4 in I
  CHECK((*f)[3][0].f == 3);
  CHECK((*f)[4][0].e == 4);
  CHECK(s(3, 4) == 1);
  CHECK(bar(1) == 1);
  CHECK(s(bar(3), bar(4)) == 0);
  auto const audit = sgt::audit_identities(s, sgt::verify_adequate_transversal(s, {0, 1, 2, 4}));
  auto const* c    = audit.find("bar_prop.lambda_i");
  REQUIRE(c);
  CHECK(!c->passed);
}

TEST_CASE("audit over order 5") {
  std::size_t seen = 0;
  std::set<std::string> broken;
  for (auto const& [name, s] : census_instances(5, 5)) {
    if (!sgt::is_abundant(s)) {
      continue;
    }
    CAPTURE(name);
    bool const qa = sgt::is_quasi_adequate(s);
    for (auto const& d : sgt::find_adequate_transversals(s)) {
      ++seen;
      auto const audit = sgt::audit_identities(s, d);
      if (qa) {
        CHECK_MESSAGE(audit.all_passed(), audit.to_text());
        continue;
      }
      for (auto const& c : audit.checks()) {
        if (c.applicable && !c.passed) {
          broken.insert(c.name);
        }
      }
    }
  }
  CHECK(seen > 0);
  CHECK(broken == std::set<std::string>{"bar_prop.lambda_i"});
}
