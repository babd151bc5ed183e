#include "sgt/io.hpp"

#include <algorithm>  // for sort, unique
#include <charconv>   // for from_chars
#include <fstream>   // for ifstream, ofstream

#include "sgt/error.hpp"

namespace sgt {

  namespace {
    void expect(bool ok, std::string const& where, std::string const& what) {
      if (!ok) {
        throw Error(ErrorCode::SchemaError,
                    (where.empty() ? "" : where + ": ") + what);
      }
    }

    std::string sub(std::string const& where, std::string const& key) {
      return where.empty() ? key : where + "." + key;
    }

    Element index_value(Json const& v, std::string const& where) {
      expect(v.is_number_integer() && v.get<std::int64_t>() >= 0, where,
             "expected a non-negative integer");
      return v.get<Element>();
    }

    std::vector<Element> parse_key(std::string const& key,
                                   std::size_t        arity,
                                   std::string const& where) {
      std::vector<Element> out;
      std::size_t          pos = 0;
      while (pos <= key.size()) {
        auto const  comma = std::min(key.find(',', pos), key.size());
        Element     value = 0;
        auto const  first = key.data() + pos;
        auto const  last  = key.data() + comma;
        auto const [ptr, ec] = std::from_chars(first, last, value);
        expect(ec == std::errc{} && ptr == last && first != last, where,
               "malformed key \"" + key + "\"");
        out.push_back(value);
        pos = comma + 1;
      }
      expect(out.size() == arity, where, "malformed key \"" + key + "\"");
      return out;
    }

    std::string pair_key(Element a, Element b) {
      return std::to_string(a) + "," + std::to_string(b);
    }

    std::map<Element, Element> embedding_from_json(Json const&        j,
                                                   std::string const& where) {
      expect(j.is_object(), where, "expected an object");
      std::map<Element, Element> out;
      for (auto const& [k, v] : j.items()) {
        out[parse_key(k, 1, where)[0]] = index_value(v, sub(where, k));
      }
      return out;
    }

    Json embedding_to_json(std::map<Element, Element> const& m) {
      Json j = Json::object();
      for (auto const& [k, v] : m) {
        j[std::to_string(k)] = v;
      }
      return j;
    }

    MapFamily family_from_json(Json const& j, std::string const& where) {
      expect(j.is_object(), where, "expected an object");
      MapFamily out;
      for (auto const& [xy, inner] : j.items()) {
        auto const k = parse_key(xy, 2, where);
        expect(inner.is_object(), sub(where, xy), "expected an object");
        auto& m = out[{k[0], k[1]}];
        for (auto const& [fg, v] : inner.items()) {
          auto const a = parse_key(fg, 2, sub(where, xy));
          m[{a[0], a[1]}] = index_value(v, sub(sub(where, xy), fg));
        }
      }
      return out;
    }

    Json family_to_json(MapFamily const& fam) {
      Json j = Json::object();
      for (auto const& [xy, m] : fam) {
        Json inner = Json::object();
        for (auto const& [fg, v] : m) {
          inner[pair_key(fg.first, fg.second)] = v;
        }
        j[pair_key(xy.first, xy.second)] = inner;
      }
      return j;
    }

    Json const& field(Json const& j, char const* key, std::string const& where) {
      expect(j.is_object(), where, "expected an object");
      expect(j.contains(key), where, std::string("missing \"") + key + "\"");
      return j.at(key);
    }

    FiniteSemigroup nested(Json const& j, char const* key, std::string const& where) {
      return semigroup_from_json(field(j, key, where), sub(where, key)).semigroup;
    }

    SpinedFactor factor_from_json(Json const& j, std::string const& where) {
      auto f = semigroup_from_json(j, where);
      expect(f.subsets.contains("transversal"), where,
             "missing subset \"transversal\"");
      return {f.semigroup, f.subsets.at("transversal")};
    }
  }  // namespace

  SemigroupFile semigroup_from_json(Json const& j, std::string const& where) {
    expect(j.is_object(), where, "expected an object");
    for (auto const& [k, v] : j.items()) {
      expect(k == "name" || k == "order" || k == "table" || k == "labels"
                 || k == "subsets",
             where, "unknown key \"" + k + "\"");
    }
    SemigroupFile f;
    auto const&   name = field(j, "name", where);
    expect(name.is_string(), sub(where, "name"), "expected a string");
    f.name             = name.get<std::string>();
    std::size_t const n = index_value(field(j, "order", where), sub(where, "order"));
    expect(n > 0, sub(where, "order"), "order must be positive");
    auto const& table = field(j, "table", where);
    expect(table.is_array() && table.size() == n, sub(where, "table"),
           "expected " + std::to_string(n) + " rows");
    std::vector<std::vector<std::int64_t>> raw;
    for (std::size_t a = 0; a < n; ++a) {
      auto const& row = table[a];
      std::string const w = sub(where, "table[" + std::to_string(a) + "]");
      expect(row.is_array() && row.size() == n, w,
             "expected " + std::to_string(n) + " entries");
      raw.emplace_back();
      for (auto const& v : row) {
        expect(v.is_number_integer(), w, "expected integers");
        raw.back().push_back(v.get<std::int64_t>());
      }
    }
    std::vector<std::string> labels;
    if (j.contains("labels")) {
      auto const& l = j.at("labels");
      expect(l.is_array() && l.size() == n, sub(where, "labels"),
             "expected " + std::to_string(n) + " strings");
      for (auto const& v : l) {
        expect(v.is_string(), sub(where, "labels"), "expected strings");
        labels.push_back(v.get<std::string>());
      }
    }
    f.semigroup = validate_table(raw, labels);
    if (j.contains("subsets")) {
      auto const& s = j.at("subsets");
      expect(s.is_object(), sub(where, "subsets"), "expected an object");
      for (auto const& [k, v] : s.items()) {
        expect(v.is_array(), sub(sub(where, "subsets"), k), "expected an array");
        ElementSet set;
        for (auto const& x : v) {
          Element e = index_value(x, sub(sub(where, "subsets"), k));
          expect(e < n, sub(sub(where, "subsets"), k), "index out of range");
          set.push_back(e);
        }
        std::sort(set.begin(), set.end());
        set.erase(std::unique(set.begin(), set.end()), set.end());
        f.subsets[k] = set;
      }
    }
    return f;
  }

  Json to_json(SemigroupFile const& f) {
    Json j;
    j["name"]  = f.name;
    j["order"] = f.semigroup.size();
    j["table"] = f.semigroup.rows();
    if (f.semigroup.has_labels()) {
      j["labels"] = f.semigroup.labels();
    }
    if (!f.subsets.empty()) {
      Json s = Json::object();
      for (auto const& [k, v] : f.subsets) {
        s[k] = v;
      }
      j["subsets"] = s;
    }
    return j;
  }

  Json read_json(std::filesystem::path const& path) {
    std::ifstream in(path);
    expect(static_cast<bool>(in), path.string(), "cannot open file");
    try {
      return Json::parse(in);
    } catch (nlohmann::json::parse_error const& e) {
      throw Error(ErrorCode::SchemaError, path.string() + ": " + e.what());
    }
  }

  void write_json(std::filesystem::path const& path, Json const& j) {
    std::ofstream out(path);
    expect(static_cast<bool>(out), path.string(), "cannot write file");
    out << j.dump(2) << '\n';
  }

  SemigroupFile parse_semigroup(std::filesystem::path const& path) {
    return semigroup_from_json(read_json(path), path.string());
  }

  void serialize(SemigroupFile const& f, std::filesystem::path const& path) {
    write_json(path, to_json(f));
  }

  StructureSkeleton skeleton_from_json(Json const& j) {
    StructureSkeleton sk;
    sk.s0           = nested(j, "s0", "");
    sk.i_band       = nested(j, "i_band", "");
    sk.lambda_band  = nested(j, "lambda_band", "");
    sk.e0_in_i      = embedding_from_json(field(j, "e0_in_i", ""), "e0_in_i");
    sk.e0_in_lambda = embedding_from_json(field(j, "e0_in_lambda", ""),
                                          "e0_in_lambda");
    return sk;
  }

  StructureInput structure_input_from_json(Json const& j) {
    StructureInput in;
    in.skeleton = skeleton_from_json(j);
    in.alpha    = family_from_json(field(j, "alpha", ""), "alpha");
    in.beta     = family_from_json(field(j, "beta", ""), "beta");
    return in;
  }

  ActionTable action_table_from_json(Json const& j) {
    ActionTable in;
    in.s0      = nested(j, "s0", "");
    in.i_band  = nested(j, "i_band", "");
    in.e0_in_i = embedding_from_json(field(j, "e0_in_i", ""), "e0_in_i");
    auto const& act = field(j, "act", "");
    expect(act.is_object(), "act", "expected an object");
    std::size_t const n0 = in.s0.size(), ni = in.i_band.size();
    std::vector<std::vector<std::optional<Element>>> cells(
        n0, std::vector<std::optional<Element>>(ni));
    for (auto const& [k, v] : act.items()) {
      auto const xe = parse_key(k, 2, "act");
      expect(xe[0] < n0 && xe[1] < ni, "act", "key \"" + k + "\" out of range");
      cells[xe[0]][xe[1]] = index_value(v, sub("act", k));
    }
    in.act.assign(n0, std::vector<Element>(ni));
    for (Element x = 0; x < n0; ++x) {
      for (Element e = 0; e < ni; ++e) {
        expect(cells[x][e].has_value(), "act",
               "missing entry \"" + pair_key(x, e) + "\"");
        in.act[x][e] = *cells[x][e];
      }
    }
    return in;
  }

  Json to_json(StructureSkeleton const& sk) {
    Json j;
    j["s0"]           = to_json(SemigroupFile{"s0", sk.s0, {}});
    j["i_band"]       = to_json(SemigroupFile{"i_band", sk.i_band, {}});
    j["lambda_band"]  = to_json(SemigroupFile{"lambda_band", sk.lambda_band, {}});
    j["e0_in_i"]      = embedding_to_json(sk.e0_in_i);
    j["e0_in_lambda"] = embedding_to_json(sk.e0_in_lambda);
    return j;
  }

  Json to_json(StructureInput const& in) {
    Json j     = to_json(in.skeleton);
    j["alpha"] = family_to_json(in.alpha);
    j["beta"]  = family_to_json(in.beta);
    return j;
  }

  Json to_json(ActionTable const& in) {
    Json j;
    j["s0"]      = to_json(SemigroupFile{"s0", in.s0, {}});
    j["i_band"]  = to_json(SemigroupFile{"i_band", in.i_band, {}});
    j["e0_in_i"] = embedding_to_json(in.e0_in_i);
    Json act     = Json::object();
    for (Element x = 0; x < in.act.size(); ++x) {
      for (Element e = 0; e < in.act[x].size(); ++e) {
        act[pair_key(x, e)] = in.act[x][e];
      }
    }
    j["act"] = act;
    return j;
  }

  SpinedInput spined_input_from_json(Json const& j) {
    SpinedInput in;
    in.l = factor_from_json(field(j, "l", ""), "l");
    in.r = factor_from_json(field(j, "r", ""), "r");
    if (j.contains("identification")) {
      in.identification
          = embedding_from_json(j.at("identification"), "identification");
    }
    return in;
  }

  Json to_json(SpinedInput const& in) {
    Json j;
    j["l"] = to_json(SemigroupFile{"l", in.l.semigroup, {{"transversal", in.l.s0}}});
    j["r"] = to_json(SemigroupFile{"r", in.r.semigroup, {{"transversal", in.r.s0}}});
    if (in.identification) {
      j["identification"] = embedding_to_json(*in.identification);
    }
    return j;
  }

  Json to_json(Report const& r) {
    Json j = Json::array();
    for (auto const& c : r.checks()) {
      Json e;
      e["name"]   = c.name;
      e["status"] = !c.applicable ? "n/a" : (c.passed ? "pass" : "fail");
      if (!c.detail.empty()) {
        e["detail"] = c.detail;
      }
      if (!c.witness.empty()) {
        e["witness"] = c.witness;
      }
      j.push_back(e);
    }
    return j;
  }

  Json to_json(BuiltSemigroup const& b) {
    Json j;
    j["kind"]   = to_string(b.kind);
    j["w"]      = to_json(SemigroupFile{"W", b.w, {{"w0", b.w0}}});
    j["legend"] = b.legend;
    j["checks"] = to_json(b.checks);
    return j;
  }

}  // namespace sgt
