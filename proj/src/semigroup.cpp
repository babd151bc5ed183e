#include "sgt/semigroup.hpp"

#include <algorithm>  // for sort, all_of
#include <numeric>    // for iota
#include <sstream>    // for ostringstream
#include <tuple>      // for tuple

#include "sgt/error.hpp"

namespace sgt {

  ////////////////////////////////////////////////////////////////////////
  // FiniteSemigroup
  ////////////////////////////////////////////////////////////////////////

  ElementSet FiniteSemigroup::idempotents() const {
    ElementSet out;
    for (Element a = 0; a < _n; ++a) {
      if (is_idempotent(a)) {
        out.push_back(a);
      }
    }
    return out;
  }

  std::vector<std::vector<Element>> FiniteSemigroup::rows() const {
    std::vector<std::vector<Element>> out(_n, std::vector<Element>(_n));
    for (Element a = 0; a < _n; ++a) {
      for (Element b = 0; b < _n; ++b) {
        out[a][b] = product(a, b);
      }
    }
    return out;
  }

  std::string FiniteSemigroup::label(Element a) const {
    if (a < _labels.size()) {
      return _labels[a];
    }
    return std::to_string(a);
  }

  FiniteSemigroup
  FiniteSemigroup::with_labels(std::vector<std::string> labels) const {
    if (!labels.empty() && labels.size() != _n) {
      throw Error(ErrorCode::SchemaError,
                  "expected " + std::to_string(_n) + " labels, got "
                      + std::to_string(labels.size()));
    }
    FiniteSemigroup out = *this;
    out._labels         = std::move(labels);
    return out;
  }

  ////////////////////////////////////////////////////////////////////////
  // Partition
  ////////////////////////////////////////////////////////////////////////

  Partition::Partition(std::vector<std::size_t> const& class_of)
      : _class_of(class_of.size()) {
    // renumber by order of first appearance
    std::vector<std::pair<std::size_t, std::size_t>> seen;
    for (Element a = 0; a < class_of.size(); ++a) {
      auto it = std::find_if(seen.begin(), seen.end(), [&](auto const& p) {
        return p.first == class_of[a];
      });
      if (it == seen.end()) {
        seen.emplace_back(class_of[a], _classes.size());
        _class_of[a] = _classes.size();
        _classes.push_back({a});
      } else {
        _class_of[a] = it->second;
        _classes[it->second].push_back(a);
      }
    }
  }

  Partition Partition::identity(std::size_t n) {
    std::vector<std::size_t> ids(n);
    std::iota(ids.begin(), ids.end(), 0);
    return Partition(ids);
  }

  Partition Partition::universal(std::size_t n) {
    return Partition(std::vector<std::size_t>(n, 0));
  }

  bool Partition::refines(Partition const& that) const noexcept {
    for (auto const& cls : _classes) {
      for (Element a : cls) {
        if (!that.same(a, cls.front())) {
          return false;
        }
      }
    }
    return true;
  }

  Partition Partition::meet(Partition const& that) const {
    std::vector<std::pair<std::size_t, std::size_t>> key(size());
    for (Element a = 0; a < size(); ++a) {
      key[a] = {class_of(a), that.class_of(a)};
    }
    return kernel(key);
  }

  Partition Partition::join(Partition const& that) const {
    // union-find over both sets of classes
    std::vector<std::size_t> parent(size());
    std::iota(parent.begin(), parent.end(), 0);
    auto find = [&parent](std::size_t a) {
      while (parent[a] != a) {
        parent[a] = parent[parent[a]];
        a         = parent[a];
      }
      return a;
    };
    for (Partition const* p : {this, &that}) {
      for (auto const& cls : p->classes()) {
        for (Element a : cls) {
          auto ra = find(a), rb = find(cls.front());
          if (ra != rb) {
            parent[std::max(ra, rb)] = std::min(ra, rb);
          }
        }
      }
    }
    std::vector<std::size_t> ids(size());
    for (Element a = 0; a < size(); ++a) {
      ids[a] = find(a);
    }
    return Partition(ids);
  }

  ////////////////////////////////////////////////////////////////////////
  // Construction and subobjects
  ////////////////////////////////////////////////////////////////////////

  FiniteSemigroup
  validate_table(std::vector<std::vector<std::int64_t>> const& raw,
                 std::vector<std::string>                      labels) {
    std::size_t const n = raw.size();
    if (n == 0) {
      throw Error(ErrorCode::NonSquare, "empty table");
    }
    for (std::size_t a = 0; a < n; ++a) {
      if (raw[a].size() != n) {
        throw Error(ErrorCode::NonSquare,
                    "row " + std::to_string(a) + " has "
                        + std::to_string(raw[a].size()) + " entries, expected "
                        + std::to_string(n),
                    {a});
      }
    }
    FiniteSemigroup s;
    s._n = n;
    s._table.resize(n * n);
    for (std::size_t a = 0; a < n; ++a) {
      for (std::size_t b = 0; b < n; ++b) {
        auto v = raw[a][b];
        if (v < 0 || static_cast<std::size_t>(v) >= n) {
          throw Error(ErrorCode::OutOfRange,
                      "entry [" + std::to_string(a) + "][" + std::to_string(b)
                          + "] = " + std::to_string(v),
                      {a, b, static_cast<std::size_t>(v < 0 ? n : v)});
        }
        s._table[a * n + b] = static_cast<Element>(v);
      }
    }
    for (Element a = 0; a < n; ++a) {
      for (Element b = 0; b < n; ++b) {
        Element ab = s(a, b);
        for (Element c = 0; c < n; ++c) {
          if (s(ab, c) != s(a, s(b, c))) {
            throw Error(ErrorCode::NotAssociative,
                        "(" + std::to_string(a) + "*" + std::to_string(b)
                            + ")*" + std::to_string(c) + " != "
                            + std::to_string(a) + "*(" + std::to_string(b)
                            + "*" + std::to_string(c) + ")",
                        {a, b, c});
          }
        }
      }
    }
    return s.with_labels(std::move(labels));
  }

  FiniteSemigroup validate_table(std::vector<std::vector<Element>> const& raw,
                                 std::vector<std::string> labels) {
    std::vector<std::vector<std::int64_t>> copy(raw.size());
    for (std::size_t a = 0; a < raw.size(); ++a) {
      copy[a].assign(raw[a].begin(), raw[a].end());
    }
    return validate_table(copy, std::move(labels));
  }

  FiniteSemigroup adjoin_identity(FiniteSemigroup const& s) {
    std::size_t const n = s.size();
    FiniteSemigroup   t;
    t._n = n + 1;
    t._table.resize((n + 1) * (n + 1));
    for (Element a = 0; a <= n; ++a) {
      for (Element b = 0; b <= n; ++b) {
        t._table[a * (n + 1) + b] = a == n ? b : (b == n ? a : s(a, b));
      }
    }
    if (s.has_labels()) {
      t._labels = s.labels();
      t._labels.push_back("1");
    }
    t._identity = n;
    return t;
  }

  bool is_closed(FiniteSemigroup const& s, ElementSet const& u) {
    std::vector<char> in(s.size(), 0);
    for (Element a : u) {
      in[a] = 1;
    }
    for (Element a : u) {
      for (Element b : u) {
        if (!in[s(a, b)]) {
          return false;
        }
      }
    }
    return true;
  }

  ElementSet generated_subsemigroup(FiniteSemigroup const& s,
                                    ElementSet const&      seed) {
    std::vector<char> in(s.size(), 0);
    ElementSet        out;
    for (Element a : seed) {
      if (!in[a]) {
        in[a] = 1;
        out.push_back(a);
      }
    }
    // every new element is multiplied on both sides by everything so far
    for (std::size_t i = 0; i < out.size(); ++i) {
      for (std::size_t j = 0; j <= i; ++j) {
        for (Element c : {s(out[i], out[j]), s(out[j], out[i])}) {
          if (!in[c]) {
            in[c] = 1;
            out.push_back(c);
          }
        }
      }
    }
    std::sort(out.begin(), out.end());
    return out;
  }

  Element Restriction::local(Element parent_elem) const {
    auto const& v = from_parent.at(parent_elem);
    if (!v) {
      throw Error(ErrorCode::OutOfRange,
                  "element " + std::to_string(parent_elem)
                      + " is not in the subsemigroup",
                  {parent_elem});
    }
    return *v;
  }

  ElementSet Restriction::to_parent_set(ElementSet const& local_set) const {
    ElementSet out;
    for (Element a : local_set) {
      out.push_back(to_parent.at(a));
    }
    std::sort(out.begin(), out.end());
    return out;
  }

  ElementSet Restriction::to_local_set(ElementSet const& parent_set) const {
    ElementSet out;
    for (Element a : parent_set) {
      out.push_back(local(a));
    }
    std::sort(out.begin(), out.end());
    return out;
  }

  Restriction restrict_to(FiniteSemigroup const& s, ElementSet const& u) {
    ElementSet sorted = u;
    std::sort(sorted.begin(), sorted.end());
    sorted.erase(std::unique(sorted.begin(), sorted.end()), sorted.end());
    if (sorted.empty()) {
      throw Error(ErrorCode::NotClosed, "empty subset");
    }
    if (sorted.back() >= s.size()) {
      throw Error(ErrorCode::OutOfRange, "subset index out of range");
    }
    Restriction r;
    r.to_parent = sorted;
    r.from_parent.assign(s.size(), std::nullopt);
    for (std::size_t i = 0; i < sorted.size(); ++i) {
      r.from_parent[sorted[i]] = i;
    }
    std::vector<std::vector<Element>> table(sorted.size(),
                                            std::vector<Element>(sorted.size()));
    for (std::size_t i = 0; i < sorted.size(); ++i) {
      for (std::size_t j = 0; j < sorted.size(); ++j) {
        auto p = s(sorted[i], sorted[j]);
        if (!r.from_parent[p]) {
          throw Error(ErrorCode::NotClosed,
                      std::to_string(sorted[i]) + "*" + std::to_string(sorted[j])
                          + " = " + std::to_string(p) + " leaves the subset",
                      {sorted[i], sorted[j], p});
        }
        table[i][j] = *r.from_parent[p];
      }
    }
    std::vector<std::string> labels;
    if (s.has_labels()) {
      for (Element a : sorted) {
        labels.push_back(s.label(a));
      }
    }
    r.semigroup = validate_table(table, labels);
    return r;
  }

  std::vector<ElementSet> enumerate_subsemigroups(FiniteSemigroup const& s,
                                                  Limits const& limits) {
    std::size_t const n = s.size();
    if (n > limits.subsemigroup_cap || n >= 8 * sizeof(unsigned long long)) {
      throw Error(ErrorCode::OrderCapExceeded,
                  "order " + std::to_string(n) + " exceeds subsemigroup cap "
                      + std::to_string(limits.subsemigroup_cap));
    }
    std::vector<ElementSet> out;
    for (unsigned long long mask = 1; mask < (1ULL << n); ++mask) {
      bool closed = true;
      for (Element a = 0; a < n && closed; ++a) {
        if (!(mask >> a & 1)) {
          continue;
        }
        for (Element b = 0; b < n; ++b) {
          if ((mask >> b & 1) && !(mask >> s(a, b) & 1)) {
            closed = false;
            break;
          }
        }
      }
      if (closed) {
        ElementSet u;
        for (Element a = 0; a < n; ++a) {
          if (mask >> a & 1) {
            u.push_back(a);
          }
        }
        out.push_back(std::move(u));
      }
    }
    std::sort(out.begin(), out.end(), [](auto const& x, auto const& y) {
      return x.size() != y.size() ? x.size() < y.size() : x < y;
    });
    return out;
  }

  ////////////////////////////////////////////////////////////////////////
  // Congruences and quotients
  ////////////////////////////////////////////////////////////////////////

  std::optional<std::vector<std::size_t>>
  congruence_violation(FiniteSemigroup const& s, Partition const& rho) {
    if (rho.size() != s.size()) {
      throw Error(ErrorCode::NotACongruence, "partition has the wrong order");
    }
    for (auto const& cls : rho.classes()) {
      Element a = cls.front();
      for (std::size_t i = 1; i < cls.size(); ++i) {
        Element b = cls[i];
        for (Element c = 0; c < s.size(); ++c) {
          if (!rho.same(s(c, a), s(c, b))) {
            return std::vector<std::size_t>{a, b, c, 0};
          }
          if (!rho.same(s(a, c), s(b, c))) {
            return std::vector<std::size_t>{a, b, c, 1};
          }
        }
      }
    }
    return std::nullopt;
  }

  bool is_congruence(FiniteSemigroup const& s, Partition const& rho) {
    return !congruence_violation(s, rho).has_value();
  }

  std::vector<Partition> enumerate_congruences(FiniteSemigroup const& s,
                                               Limits const& limits) {
    std::size_t const n = s.size();
    if (n > limits.congruence_cap) {
      throw Error(ErrorCode::OrderCapExceeded,
                  "order " + std::to_string(n) + " exceeds congruence cap "
                      + std::to_string(limits.congruence_cap));
    }
    std::vector<Partition>   out;
    std::vector<std::size_t> rgs(n, 0);
    // restricted growth strings: rgs[0] = 0, rgs[i] <= 1 + max(rgs[..i))
    auto rec = [&](auto&& self, std::size_t i, std::size_t max_id) -> void {
      if (i == n) {
        Partition p(rgs);
        if (is_congruence(s, p)) {
          out.push_back(std::move(p));
        }
        return;
      }
      for (std::size_t id = 0; id <= max_id + 1; ++id) {
        rgs[i] = id;
        self(self, i + 1, std::max(max_id, id));
      }
    };
    if (n > 0) {
      rec(rec, 1, 0);
    }
    return out;
  }

  Quotient quotient(FiniteSemigroup const& s, Partition const& rho) {
    if (auto w = congruence_violation(s, rho)) {
      throw Error(ErrorCode::NotACongruence,
                  "elements " + std::to_string((*w)[0]) + " and "
                      + std::to_string((*w)[1]) + " separated by multiplier "
                      + std::to_string((*w)[2]),
                  *w);
    }
    std::size_t const                 k = rho.number_of_classes();
    std::vector<std::vector<Element>> table(k, std::vector<Element>(k));
    for (std::size_t i = 0; i < k; ++i) {
      for (std::size_t j = 0; j < k; ++j) {
        table[i][j] = rho.class_of(
            s(rho.classes()[i].front(), rho.classes()[j].front()));
      }
    }
    return Quotient{validate_table(table), rho.class_ids()};
  }

  ////////////////////////////////////////////////////////////////////////
  // Morphisms
  ////////////////////////////////////////////////////////////////////////

  bool is_morphism(FiniteSemigroup const& s,
                   FiniteSemigroup const& t,
                   ElementMap const&      phi) {
    if (phi.size() != s.size()) {
      return false;
    }
    for (Element a : phi) {
      if (a >= t.size()) {
        return false;
      }
    }
    for (Element a = 0; a < s.size(); ++a) {
      for (Element b = 0; b < s.size(); ++b) {
        if (phi[s(a, b)] != t(phi[a], phi[b])) {
          return false;
        }
      }
    }
    return true;
  }

  bool is_isomorphism(FiniteSemigroup const& s,
                      FiniteSemigroup const& t,
                      ElementMap const&      phi) {
    if (s.size() != t.size() || !is_morphism(s, t, phi)) {
      return false;
    }
    std::vector<char> hit(t.size(), 0);
    for (Element a : phi) {
      if (hit[a]) {
        return false;
      }
      hit[a] = 1;
    }
    return true;
  }

  namespace {
    // Isomorphism-invariant data of a single element.
    using Signature = std::vector<std::size_t>;

    std::vector<Signature> signatures(FiniteSemigroup const& s) {
      std::size_t const      n = s.size();
      std::vector<Signature> out(n);
      for (Element a = 0; a < n; ++a) {
        // index and period of the monogenic subsemigroup
        std::vector<Element> powers{a};
        std::size_t          index = 0, period = 0;
        while (true) {
          Element next = s(powers.back(), a);
          auto    it   = std::find(powers.begin(), powers.end(), next);
          if (it != powers.end()) {
            index  = static_cast<std::size_t>(it - powers.begin());
            period = powers.size() - index;
            break;
          }
          powers.push_back(next);
        }
        std::size_t fix_right = 0, fix_left = 0, acts_right = 0,
                    acts_left = 0;
        std::vector<char> right_ideal(n, 0), left_ideal(n, 0);
        for (Element b = 0; b < n; ++b) {
          fix_right += s(a, b) == a;
          fix_left += s(b, a) == a;
          acts_left += s(a, b) == b;
          acts_right += s(b, a) == b;
          right_ideal[s(a, b)] = 1;
          left_ideal[s(b, a)]  = 1;
        }
        out[a] = {s.is_idempotent(a),
                  index,
                  period,
                  fix_right,
                  fix_left,
                  acts_left,
                  acts_right,
                  static_cast<std::size_t>(
                      std::count(right_ideal.begin(), right_ideal.end(), 1)),
                  static_cast<std::size_t>(
                      std::count(left_ideal.begin(), left_ideal.end(), 1))};
      }
      return out;
    }
  }  // namespace

  std::optional<ElementMap> find_isomorphism(FiniteSemigroup const& s,
                                             FiniteSemigroup const& t) {
    std::size_t const n = s.size();
    if (n != t.size()) {
      return std::nullopt;
    }
    auto const sig_s = signatures(s);
    auto const sig_t = signatures(t);
    {
      auto a = sig_s, b = sig_t;
      std::sort(a.begin(), a.end());
      std::sort(b.begin(), b.end());
      if (a != b) {
        return std::nullopt;
      }
    }
    std::size_t const  none = n;
    ElementMap         phi(n, none);
    std::vector<Element> inv(n, none);

    // Consistency of assigning phi(a) = c given phi on 0..a-1.
    auto consistent = [&](Element a) {
      for (Element b = 0; b <= a; ++b) {
        for (auto [x, y] : {std::pair{a, b}, std::pair{b, a}}) {
          Element xy    = s(x, y);
          Element image = t(phi[x], phi[y]);
          if (phi[xy] != none) {
            if (phi[xy] != image) {
              return false;
            }
          } else if (inv[image] != none) {
            return false;
          }
        }
      }
      return true;
    };

    auto rec = [&](auto&& self, Element a) -> bool {
      if (a == n) {
        return true;
      }
      for (Element c = 0; c < n; ++c) {
        if (inv[c] != none || sig_s[a] != sig_t[c]) {
          continue;
        }
        phi[a] = c;
        inv[c] = a;
        if (consistent(a) && self(self, a + 1)) {
          return true;
        }
        phi[a] = none;
        inv[c] = none;
      }
      return false;
    };
    if (rec(rec, 0) && is_isomorphism(s, t, phi)) {
      return phi;
    }
    return std::nullopt;
  }

  ////////////////////////////////////////////////////////////////////////
  // Bands
  ////////////////////////////////////////////////////////////////////////

  BandClassification band_class(FiniteSemigroup const& s) {
    std::size_t const  n = s.size();
    BandClassification b;
    b.is_band = true;
    for (Element x = 0; x < n; ++x) {
      b.is_band = b.is_band && s.is_idempotent(x);
    }
    if (!b.is_band) {
      return b;
    }
    bool commutative = true, lz = true, rz = true, rect = true, lreg = true,
         rreg = true, lnorm = true, rnorm = true, norm = true;
    for (Element x = 0; x < n; ++x) {
      for (Element y = 0; y < n; ++y) {
        Element xy = s(x, y), yx = s(y, x), xyx = s(xy, x);
        commutative = commutative && xy == yx;
        lz          = lz && xy == x;
        rz          = rz && xy == y;
        rect        = rect && xyx == x;
        lreg        = lreg && xyx == xy;
        rreg        = rreg && xyx == yx;
        for (Element z = 0; z < n; ++z) {
          lnorm = lnorm && s(xy, z) == s(s(x, z), y);
          rnorm = rnorm && s(xy, z) == s(yx, z);
          norm  = norm && s(s(xy, z), x) == s(s(s(x, z), y), x);
        }
      }
    }
    b.is_semilattice   = commutative;
    b.is_left_zero     = lz;
    b.is_right_zero    = rz;
    b.is_rectangular   = rect;
    b.is_left_regular  = lreg;
    b.is_right_regular = rreg;
    b.is_left_normal   = lnorm;
    b.is_right_normal  = rnorm;
    b.is_normal        = norm;
    return b;
  }

  ElementSet band_j_class(FiniteSemigroup const& band, Element e) {
    for (Element x = 0; x < band.size(); ++x) {
      if (!band.is_idempotent(x)) {
        throw Error(ErrorCode::NotABand,
                    "element " + std::to_string(x) + " is not idempotent",
                    {x});
      }
    }
    auto ideal = [&band](Element a) {
      // E^1 a E^1
      std::vector<char> in(band.size(), 0);
      in[a] = 1;
      for (Element x = 0; x < band.size(); ++x) {
        in[band(x, a)] = 1;
        in[band(a, x)] = 1;
        for (Element y = 0; y < band.size(); ++y) {
          in[band(band(x, a), y)] = 1;
        }
      }
      return in;
    };
    auto const target = ideal(e);
    ElementSet out;
    for (Element f = 0; f < band.size(); ++f) {
      if (ideal(f) == target) {
        out.push_back(f);
      }
    }
    return out;
  }

}  // namespace sgt
