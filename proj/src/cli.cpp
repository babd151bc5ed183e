#include "sgt/cli.hpp"

#include <sstream>  // for ostringstream

#include "CLI11.hpp"

#include "sgt/catalog.hpp"
#include "sgt/census.hpp"
#include "sgt/constructions.hpp"
#include "sgt/decomposer.hpp"
#include "sgt/error.hpp"
#include "sgt/green.hpp"
#include "sgt/io.hpp"
#include "sgt/transversal.hpp"

namespace sgt {

  namespace {
    struct Options {
      bool        json      = false;
      bool        seed_only = false;
      std::size_t max_order = census_default_cap;
      bool        max_order_given = false;
      std::string file;
      std::string kind;
      std::string transversal;
      std::string key;
      std::size_t order = 0;
    };

    Limits limits_of(Options const& o) {
      Limits l;
      if (o.max_order_given) {
        l.subsemigroup_cap = o.max_order;
        l.congruence_cap   = o.max_order;
      }
      return l;
    }

    std::string set_text(FiniteSemigroup const& s, ElementSet const& u) {
      std::string out = "{";
      for (std::size_t i = 0; i < u.size(); ++i) {
        out += (i == 0 ? "" : ", ") + s.label(u[i]);
      }
      return out + "}";
    }

    std::string partition_text(FiniteSemigroup const& s, Partition const& p) {
      std::string out;
      for (auto const& c : p.classes()) {
        out += (out.empty() ? "" : " ") + set_text(s, c);
      }
      return out;
    }

    std::string table_text(FiniteSemigroup const& s) {
      std::size_t width = 1;
      for (Element a = 0; a < s.size(); ++a) {
        width = std::max(width, s.label(a).size());
      }
      auto pad = [width](std::string const& t) {
        return std::string(width - t.size(), ' ') + t;
      };
      std::ostringstream os;
      os << "  " << pad("") << " |";
      for (Element b = 0; b < s.size(); ++b) {
        os << ' ' << pad(s.label(b));
      }
      os << '\n';
      for (Element a = 0; a < s.size(); ++a) {
        os << "  " << pad(s.label(a)) << " |";
        for (Element b = 0; b < s.size(); ++b) {
          os << ' ' << pad(s.label(s(a, b)));
        }
        os << '\n';
      }
      return os.str();
    }

    Json partition_json(Partition const& p) {
      return p.classes();
    }

    char const* yes(bool b) {
      return b ? "yes" : "no";
    }

    Json profile_json(AbundanceProfile const& p) {
      Json j;
      j["abundant"]               = p.is_abundant;
      j["adequate"]               = p.is_adequate;
      j["left_adequate"]          = p.is_left_adequate;
      j["right_adequate"]         = p.is_right_adequate;
      j["quasi_adequate"]         = p.is_quasi_adequate;
      j["left_ample"]             = p.left_ample_applicable
                                        ? Json(p.is_left_ample)
                                        : Json(nullptr);
      j["idempotent_connected"]   = p.is_idempotent_connected;
      j["bountiful"]              = p.is_bountiful;
      j["regular"]                = p.is_regular;
      j["orthodox"]               = p.is_orthodox;
      j["inverse"]                = p.is_inverse;
      return j;
    }

    int analyze(Options const& o, std::ostream& out) {
      auto const f     = parse_semigroup(o.file);
      auto const& s    = f.semigroup;
      auto const p     = abundance_profile(s);
      auto const star  = star_relations(s);
      auto const green = green_relations(s);
      Json       j;
      j["name"]    = f.name;
      j["order"]   = s.size();
      j["profile"] = profile_json(p);
      j["idempotents"] = s.idempotents();
      j["rstar"]   = partition_json(star.rstar);
      j["lstar"]   = partition_json(star.lstar);
      j["green_r"] = partition_json(green.r);
      j["green_l"] = partition_json(green.l);

      std::ostringstream os;
      os << "semigroup " << f.name << ", order " << s.size() << '\n';
      os << "idempotents: " << set_text(s, s.idempotents()) << '\n';
      if (!p.is_abundant) {
        os << "classification: not abundant\n";
      } else {
        os << "classification: abundant";
        for (auto const& [name, flag] :
             std::vector<std::pair<char const*, bool>>{
                 {"adequate", p.is_adequate},
                 {"left adequate", p.is_left_adequate},
                 {"right adequate", p.is_right_adequate},
                 {"quasi-adequate", p.is_quasi_adequate},
                 {"left ample", p.left_ample_applicable && p.is_left_ample},
                 {"idempotent-connected", p.is_idempotent_connected},
                 {"bountiful", p.is_bountiful},
                 {"regular", p.is_regular},
                 {"orthodox", p.is_orthodox},
                 {"inverse", p.is_inverse}}) {
          if (flag) {
            os << ", " << name;
          }
        }
        os << '\n';
      }
      os << "R*-classes: " << partition_text(s, star.rstar) << '\n';
      os << "L*-classes: " << partition_text(s, star.lstar) << '\n';
      os << "R-classes:  " << partition_text(s, green.r) << '\n';
      os << "L-classes:  " << partition_text(s, green.l) << '\n';

      if (p.is_quasi_adequate) {
        auto const dl = delta(s);
        Json       jd;
        jd["pairs"]          = dl.pairs;
        jd["is_equivalence"] = dl.is_equivalence;
        jd["is_congruence"]  = dl.is_congruence;
        j["delta"]           = jd;
        os << "delta: " << dl.pairs.size() << " pairs, equivalence "
           << yes(dl.is_equivalence) << ", congruence "
           << yes(dl.is_congruence);
        if (dl.partition) {
          os << ", classes " << partition_text(s, *dl.partition);
        }
        os << '\n';
        try {
          auto const g = min_adequate_admissible_congruence(s, limits_of(o));
          j["gamma"]   = partition_json(g);
          os << "gamma: " << partition_text(s, g) << '\n';
        } catch (Error const& e) {
          if (e.code() != ErrorCode::OrderCapExceeded
              && e.code() != ErrorCode::NoMinimum) {
            throw;
          }
          j["gamma"] = Json{{"skipped", e.what()}};
          os << "gamma: skipped (" << e.what() << ")\n";
        }
      } else {
        j["delta"] = nullptr;
        j["gamma"] = nullptr;
        os << "delta, gamma: not applicable (not quasi-adequate)\n";
      }
      out << (o.json ? j.dump(2) + "\n" : os.str());
      return exit_ok;
    }

    int transversals(Options const& o, std::ostream& out) {
      auto const f  = parse_semigroup(o.file);
      auto const& s = f.semigroup;
      auto const ts = find_adequate_transversals(s, limits_of(o));
      bool       ok = true;
      Json       j  = Json::array();
      std::ostringstream os;
      os << "semigroup " << f.name << ": " << ts.size()
         << " adequate transversal(s)\n";
      for (std::size_t i = 0; i < ts.size(); ++i) {
        auto const& d = ts[i];
        auto const  p = transversal_profile(s, d);
        Json        e;
        e["s0"]             = d.s0;
        e["quasi_ideal"]    = p.is_quasi_ideal;
        e["multiplicative"] = p.is_multiplicative;
        e["admissible"]     = p.is_admissible;
        e["i"]              = d.i_set;
        e["lambda"]         = d.lambda_set;
        os << "t" << i << " " << set_text(s, d.s0) << ": quasi-ideal "
           << yes(p.is_quasi_ideal) << ", multiplicative "
           << yes(p.is_multiplicative) << ", admissible "
           << yes(p.is_admissible) << '\n';
        os << "  I = " << set_text(s, d.i_set)
           << ", Lambda = " << set_text(s, d.lambda_set) << '\n';
        if (!o.seed_only) {
          auto const audit = audit_identities(s, d);
          ok               = ok && audit.all_passed();
          e["audit"]       = to_json(audit);
          os << audit.to_text();
        }
        j.push_back(e);
      }
      out << (o.json ? j.dump(2) + "\n" : os.str());
      return ok ? exit_ok : exit_check_failed;
    }

    int construct(Options const& o, std::ostream& out) {
      auto const     doc = read_json(o.file);
      BuiltSemigroup b;
      Report         input_report;
      if (o.kind == "general") {
        auto const in = structure_input_from_json(doc);
        input_report  = validate_structure_input(in);
        b             = build_w(in);
      } else if (o.kind == "quasi-ideal") {
        b = build_quasi_ideal_w(skeleton_from_json(doc));
      } else if (o.kind == "spined") {
        auto const in = spined_input_from_json(doc);
        b             = build_spined_product(in.l, in.r, in.identification);
      } else {
        auto const in = action_table_from_json(doc);
        input_report  = validate_action_table(in);
        b             = build_semidirect(in);
      }
      auto const special = check_inverse_specialization(b);
      if (o.json) {
        Json j               = to_json(b);
        j["input"]           = to_json(input_report);
        j["specialization"]  = to_json(special);
        out << j.dump(2) << '\n';
      } else {
        out << "W (" << to_string(b.kind) << "), order " << b.w.size() << '\n'
            << table_text(b.w) << "W0 = " << set_text(b.w, b.w0) << '\n';
        if (!input_report.checks().empty()) {
          out << "input conditions:\n" << input_report.to_text();
        }
        out << "postconditions:\n"
            << b.checks.to_text() << "inverse specialization:\n"
            << special.to_text();
      }
      return b.checks.all_passed() && special.all_passed()
                 ? exit_ok
                 : exit_check_failed;
    }

    int decompose(Options const& o, std::ostream& out) {
      auto const f  = parse_semigroup(o.file);
      auto const& s = f.semigroup;
      if (!f.subsets.contains(o.transversal)) {
        throw Error(ErrorCode::SchemaError,
                    o.file + ": no subset named \"" + o.transversal + "\"");
      }
      auto const d  = verify_adequate_transversal(s, f.subsets.at(o.transversal));
      auto const rt = roundtrip(s, d);
      bool const ok = rt.checks.all_passed();
      if (o.json) {
        Json j;
        j["rebuilt"] = to_json(rt.rebuilt);
        j["iso"]     = rt.iso;
        j["checks"]  = to_json(rt.checks);
        out << j.dump(2) << '\n';
      } else {
        out << "semigroup " << f.name << ", transversal " << o.transversal << " "
            << set_text(s, d.s0) << '\n'
            << "W, order " << rt.rebuilt.w.size() << '\n'
            << table_text(rt.rebuilt.w) << "x -> (e_x, xbar, f_x):";
        for (Element x = 0; x < s.size(); ++x) {
          out << ' ' << s.label(x) << "->" << rt.rebuilt.w.label(rt.iso[x]);
        }
        out << "\nchecks:\n" << rt.checks.to_text();
      }
      return ok ? exit_ok : exit_check_failed;
    }

    int census(Options const& o, std::ostream& out) {
      auto const cap = o.max_order_given ? o.max_order : census_default_cap;
      auto const all = enumerate_semigroups(o.order, true, cap);
      auto const c   = tabulate(o.order, all);
      if (o.json) {
        Json j;
        j["order"]            = c.order;
        j["classes"]          = c.total;
        j["abundant"]         = c.abundant;
        j["adequate"]         = c.adequate;
        j["quasi_adequate"]   = c.quasi_adequate;
        j["with_transversal"] = c.with_transversal;
        j["with_admissible"]  = c.with_admissible;
        out << j.dump(2) << '\n';
      } else {
        out << "order " << c.order << ": " << c.total
            << " isomorphism classes\n"
            << "  abundant                        " << c.abundant << '\n'
            << "  adequate                        " << c.adequate << '\n'
            << "  quasi-adequate                  " << c.quasi_adequate << '\n'
            << "  with an adequate transversal    " << c.with_transversal << '\n'
            << "  with an admissible transversal  " << c.with_admissible << '\n';
      }
      return exit_ok;
    }

    int show_catalog(Options const& o, std::ostream& out) {
      auto const s = catalog(o.key);
      SemigroupFile f{parse_catalog_key(o.key).to_string(), s, {}};
      out << to_json(f).dump(2) << '\n';
      return exit_ok;
    }

    bool is_input_error(ErrorCode c) {
      switch (c) {
        case ErrorCode::SchemaError:
        case ErrorCode::UnknownKey:
        case ErrorCode::ParamOutOfRange:
        case ErrorCode::NonSquare:
        case ErrorCode::OutOfRange:
        case ErrorCode::NotAssociative:
        case ErrorCode::OrderCapExceeded:
          return true;
        default:
          return false;
      }
    }
  }  // namespace

  int run_command(std::vector<std::string> const& args,
                  std::ostream&                   out,
                  std::ostream&                   err) {
    Options  o;
    CLI::App app{"Adequate transversals of finite semigroups", "sgt"};
    app.require_subcommand(1);
    app.add_flag("--json", o.json, "machine-readable output");
    auto* max_order = app.add_option("--max-order", o.max_order,
                                     "cap for exhaustive searches");

    auto* analyze_cmd = app.add_subcommand("analyze", "classification profile");
    analyze_cmd->add_option("file", o.file)->required();

    auto* trans_cmd
        = app.add_subcommand("transversals", "all adequate transversals");
    trans_cmd->add_option("file", o.file)->required();
    trans_cmd->add_flag("--seed-only", o.seed_only, "skip the identity audits");

    auto* construct_cmd = app.add_subcommand("construct", "run a builder");
    construct_cmd->add_option("kind", o.kind)
        ->required()
        ->check(CLI::IsMember({"general", "quasi-ideal", "spined", "semidirect"}));
    construct_cmd->add_option("file", o.file)->required();

    auto* decompose_cmd
        = app.add_subcommand("decompose", "extraction and roundtrip");
    decompose_cmd->add_option("file", o.file)->required();
    decompose_cmd->add_option("--transversal", o.transversal)->required();

    auto* census_cmd = app.add_subcommand("census", "small-order census");
    census_cmd->add_option("n", o.order)->required();

    auto* catalog_cmd = app.add_subcommand("catalog", "print a catalog entry");
    catalog_cmd->add_option("key", o.key)->required();

    for (auto* sc : app.get_subcommands({})) {
      sc->fallthrough();
    }

    try {
      std::vector<std::string> reversed(args.rbegin(), args.rend());
      app.parse(reversed);
    } catch (CLI::ParseError const& e) {
      int const code = app.exit(e, out, err);
      return code == 0 ? exit_ok : exit_usage;
    }
    o.max_order_given = max_order->count() > 0;

    try {
      if (analyze_cmd->parsed()) {
        return analyze(o, out);
      }
      if (trans_cmd->parsed()) {
        return transversals(o, out);
      }
      if (construct_cmd->parsed()) {
        return construct(o, out);
      }
      if (decompose_cmd->parsed()) {
        return decompose(o, out);
      }
      if (census_cmd->parsed()) {
        return census(o, out);
      }
      return show_catalog(o, out);
    } catch (Error const& e) {
      err << "error: " << e.what() << '\n';
      return is_input_error(e.code()) ? exit_usage : exit_check_failed;
    } catch (std::exception const& e) {
      err << "error: " << e.what() << '\n';
      return exit_usage;
    }
  }

}  // namespace sgt
