#include "sgt/catalog.hpp"

#include <algorithm>  // for all_of
#include <cctype>     // for isalnum
#include <charconv>   // for from_chars
#include <map>        // for map

#include "sgt/error.hpp"
#include "sgt/green.hpp"

namespace sgt {

  namespace {
    using Table = std::vector<std::vector<Element>>;

    constexpr std::size_t max_param = 12;

    struct Expected {
      bool abundant;
      bool adequate;
      bool quasi_adequate;
      bool regular;
      bool inverse;
    };

    Table square(std::size_t n, auto product) {
      Table t(n, std::vector<Element>(n));
      for (Element a = 0; a < n; ++a) {
        for (Element b = 0; b < n; ++b) {
          t[a][b] = product(a, b);
        }
      }
      return t;
    }

    std::vector<std::string> numbered(std::size_t n) {
      std::vector<std::string> out;
      for (std::size_t i = 0; i < n; ++i) {
        out.push_back(std::to_string(i));
      }
      return out;
    }

    void require_params(CatalogKey const& key, std::size_t count) {
      if (key.params.size() != count) {
        throw Error(ErrorCode::ParamOutOfRange,
                    key.family + " takes " + std::to_string(count)
                        + " parameter(s)");
      }
    }

    void require_range(CatalogKey const& key,
                       std::size_t       value,
                       std::size_t       lo,
                       std::size_t       hi) {
      if (value < lo || value > hi) {
        throw Error(ErrorCode::ParamOutOfRange,
                    key.family + ": parameter " + std::to_string(value)
                        + " outside [" + std::to_string(lo) + ", "
                        + std::to_string(hi) + "]");
      }
    }

    // Partial injections of {0, ..., n - 1}, as image vectors with n for
    // "undefined", composed left to right.
    FiniteSemigroup symmetric_inverse(std::size_t n) {
      std::vector<std::vector<std::size_t>> maps;
      std::vector<std::size_t>              cur(n, 0);
      // every function {0..n-1} -> {0..n} that is injective where defined
      std::size_t total = 1;
      for (std::size_t i = 0; i < n; ++i) {
        total *= n + 1;
      }
      for (std::size_t code = 0; code < total; ++code) {
        std::size_t c = code;
        for (std::size_t i = 0; i < n; ++i) {
          cur[i] = c % (n + 1);
          c /= n + 1;
        }
        bool injective = true;
        for (std::size_t i = 0; i < n && injective; ++i) {
          for (std::size_t j = i + 1; j < n && injective; ++j) {
            injective = cur[i] == n || cur[i] != cur[j];
          }
        }
        if (injective) {
          maps.push_back(cur);
        }
      }
      std::sort(maps.begin(), maps.end());
      std::map<std::vector<std::size_t>, Element> index;
      for (Element i = 0; i < maps.size(); ++i) {
        index[maps[i]] = i;
      }
      std::vector<std::string> labels;
      for (auto const& m : maps) {
        std::string s = "[";
        for (std::size_t i = 0; i < n; ++i) {
          s += (i == 0 ? "" : " ") + (m[i] == n ? std::string("-")
                                                : std::to_string(m[i]));
        }
        labels.push_back(s + "]");
      }
      auto const t = square(maps.size(), [&](Element a, Element b) {
        std::vector<std::size_t> c(n, n);
        for (std::size_t i = 0; i < n; ++i) {
          if (maps[a][i] != n) {
            c[i] = maps[b][maps[a][i]];
          }
        }
        return index.at(c);
      });
      return validate_table(t, labels);
    }

    FiniteSemigroup build(CatalogKey const& key, Expected& exp) {
      auto const& f = key.family;
      if (f == "chain" || f == "left_zero" || f == "right_zero" || f == "null"
          || f == "cyclic_group") {
        require_params(key, 1);
        std::size_t const n = key.params[0];
        require_range(key, n, 1, max_param);
        bool const trivial = n == 1;
        if (f == "chain") {
          exp = {true, true, true, true, true};
          return validate_table(
              square(n, [](Element a, Element b) { return std::min(a, b); }),
              numbered(n));
        }
        if (f == "left_zero") {
          exp = {true, trivial, true, true, trivial};
          return validate_table(
              square(n, [](Element a, Element) { return a; }), numbered(n));
        }
        if (f == "right_zero") {
          exp = {true, trivial, true, true, trivial};
          return validate_table(
              square(n, [](Element, Element b) { return b; }), numbered(n));
        }
        if (f == "null") {
          exp = {trivial, trivial, trivial, trivial, trivial};
          return validate_table(
              square(n, [](Element, Element) { return Element{0}; }),
              numbered(n));
        }
        exp = {true, true, true, true, true};
        return validate_table(
            square(n, [n](Element a, Element b) { return (a + b) % n; }),
            numbered(n));
      }
      if (f == "rect_band") {
        require_params(key, 2);
        std::size_t const m = key.params[0], n = key.params[1];
        require_range(key, m, 1, max_param);
        require_range(key, n, 1, max_param);
        require_range(key, m * n, 1, max_param);
        bool const trivial = m * n == 1;
        exp = {true, trivial, true, true, trivial};
        std::vector<std::string> labels;
        for (std::size_t i = 0; i < m; ++i) {
          for (std::size_t j = 0; j < n; ++j) {
            labels.push_back("(" + std::to_string(i) + "," + std::to_string(j)
                             + ")");
          }
        }
        return validate_table(square(m * n,
                                     [n](Element a, Element b) {
                                       return (a / n) * n + b % n;
                                     }),
                              labels);
      }
      if (f == "brandt2") {
        require_params(key, 0);
        exp = {true, true, true, true, true};
        // 0, a = e12, a' = e21, aa' = e11, a'a = e22
        std::size_t const row[] = {0, 1, 2, 1, 2};
        std::size_t const col[] = {0, 2, 1, 1, 2};
        auto const        t     = square(5, [&](Element x, Element y) -> Element {
          if (x == 0 || y == 0 || col[x] != row[y]) {
            return 0;
          }
          for (Element z = 1; z < 5; ++z) {
            if (row[z] == row[x] && col[z] == col[y]) {
              return z;
            }
          }
          return 0;
        });
        return validate_table(t, {"0", "a", "a'", "aa'", "a'a"});
      }
      if (f == "sym_inv") {
        require_params(key, 1);
        require_range(key, key.params[0], 1, 3);
        exp = {true, true, true, true, true};
        return symmetric_inverse(key.params[0]);
      }
      if (f == "lrb3") {
        require_params(key, 0);
        exp = {true, false, true, true, false};
        // 1 is the identity; {a, 0} is a left zero band
        Table const t{{0, 1, 2}, {1, 1, 1}, {2, 2, 2}};
        return validate_table(t, {"1", "a", "0"});
      }
      throw Error(ErrorCode::UnknownKey, "unknown catalog family " + f);
    }
  }  // namespace

  std::string CatalogKey::to_string() const {
    if (params.empty()) {
      return family;
    }
    std::string out = family + "(";
    for (std::size_t i = 0; i < params.size(); ++i) {
      out += (i == 0 ? "" : ",") + std::to_string(params[i]);
    }
    return out + ")";
  }

  CatalogKey parse_catalog_key(std::string const& text) {
    CatalogKey  key;
    auto const  open = text.find('(');
    key.family       = text.substr(0, open);
    if (key.family.empty()
        || !std::all_of(key.family.begin(), key.family.end(), [](char c) {
             return std::isalnum(static_cast<unsigned char>(c)) || c == '_';
           })) {
      throw Error(ErrorCode::UnknownKey, "malformed catalog key " + text);
    }
    if (open == std::string::npos) {
      return key;
    }
    if (text.back() != ')') {
      throw Error(ErrorCode::UnknownKey, "malformed catalog key " + text);
    }
    std::string const body = text.substr(open + 1, text.size() - open - 2);
    std::size_t       pos  = 0;
    while (pos <= body.size()) {
      auto const  comma = std::min(body.find(',', pos), body.size());
      std::size_t value = 0;
      auto const  first = body.data() + pos;
      auto const  last  = body.data() + comma;
      auto const [ptr, ec] = std::from_chars(first, last, value);
      if (ec != std::errc{} || ptr != last || first == last) {
        throw Error(ErrorCode::UnknownKey, "malformed catalog key " + text);
      }
      key.params.push_back(value);
      pos = comma + 1;
    }
    return key;
  }

  std::vector<std::string> catalog_families() {
    return {"chain(n)",        "left_zero(n)", "right_zero(n)",
            "rect_band(m,n)",  "cyclic_group(n)", "null(n)",
            "brandt2",         "sym_inv(n)",   "lrb3"};
  }

  FiniteSemigroup catalog(CatalogKey const& key) {
    Expected   exp{};
    auto const s = build(key, exp);
    auto const p = abundance_profile(s);
    if (p.is_abundant != exp.abundant || p.is_adequate != exp.adequate
        || p.is_quasi_adequate != exp.quasi_adequate
        || p.is_regular != exp.regular || p.is_inverse != exp.inverse) {
      invariant_broken("catalog entry " + key.to_string()
                       + " does not have its documented classification");
    }
    return s;
  }

  FiniteSemigroup catalog(std::string const& key) {
    return catalog(parse_catalog_key(key));
  }

}  // namespace sgt
