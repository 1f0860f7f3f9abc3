// cli.hpp -- the command line front end. Thin and sequential: commands
// resolve their inputs (built-in names or config files), call the library,
// and render one report value as text or JSON.
//
// Exit codes: 0 ok / verified_on_domain; 1 refuted or counterexample
// found; 2 hypothesis_failed; 3 input error; 4 inconclusive_cap.

#pragma once

#include "skewpbw/config.hpp"
#include "skewpbw/expr.hpp"
#include "skewpbw/report_io.hpp"

#include "CLI11.hpp"

#include <cstdlib>
#include <filesystem>
#include <fstream>

namespace skewpbw {

namespace cli {

inline std::string read_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw Error("cannot open file: " + path);
  std::ostringstream os;
  os << in.rdbuf();
  return os.str();
}

inline std::size_t env_predicate_cap() {
  if (const char* v = std::getenv("SKEWPBW_PREDICATE_CAP")) {
    char* end = nullptr;
    unsigned long cap = std::strtoul(v, &end, 10);
    if (end && *end == '\0' && cap > 0) return cap;
  }
  return default_predicate_cap;
}

inline RingSpec resolve_ring_spec(const std::string& arg) {
  if (auto spec = builtin_ring_spec(arg)) return *spec;
  if (std::filesystem::exists(arg))
    return ring_spec_from_config(parse_config(read_file(arg)));
  throw Error("--spec " + arg + " is neither a built-in ring name nor a file");
}

inline PresPtr resolve_presentation(const std::string& arg) {
  if (std::filesystem::exists(arg)) return load_presentation_text(read_file(arg));
  return named_presentation(arg);
}

inline PresPtr reorder(PresPtr P, const std::string& order_name) {
  if (order_name.empty()) return P;
  auto o = MonomialOrder::by_name(order_name);
  if (!o) throw Error("unknown monomial order: " + order_name);
  return with_order(P, *o);
}

}  // namespace cli

inline int run_cli(const std::vector<std::string>& args, std::ostream& out,
                   std::ostream& err) {
  CLI::App app{"exact kernel and verification harness for skew PBW extensions "
               "over finite coefficient rings"};
  app.require_subcommand(1);

  std::string spec_arg, pres_arg, prop_arg, expr_arg, lhs_arg, rhs_arg;
  std::string theorem_arg, mode_arg = "exhaustive", order_arg, out_path;
  std::string emit_name;
  unsigned max_terms = 2, max_deg = 2, word_len = default_word_length;
  std::uint64_t samples = 10000, seed = 1;
  std::size_t cap = cli::env_predicate_cap();
  bool json = false;
  std::vector<std::string> ideal_gens, emit_params;

  CLI::App* ring = app.add_subcommand("ring", "tabulated coefficient rings");
  CLI::App* ring_validate = ring->add_subcommand("validate", "check the ring axioms");
  ring_validate->add_option("--spec", spec_arg, "built-in ring name or config file")
      ->required();
  ring_validate->add_flag("--json", json, "machine-readable output");
  CLI::App* ring_props =
      ring->add_subcommand("props", "exhaustive ring property predicates");
  ring_props->add_option("--spec", spec_arg)->required();
  ring_props->add_option("--prop", prop_arg,
                         "reduced|symmetric|reversible|semicommutative|"
                         "weak_symmetric|abelian|commutative")
      ->required();
  ring_props->add_option("--cap", cap, "predicate size cap");
  ring_props->add_flag("--json", json);

  CLI::App* sys = app.add_subcommand("sys", "sigma/delta systems");
  CLI::App* sys_check =
      sys->add_subcommand("check", "validate maps and run the system predicates");
  sys_check->add_option("--presentation", pres_arg)->required();
  sys_check->add_option("--cap", cap);
  sys_check->add_flag("--json", json);

  CLI::App* pbw = app.add_subcommand("pbw", "presentations and normal forms");
  CLI::App* pbw_check =
      pbw->add_subcommand("check", "diamond-lemma confluence check");
  pbw_check->add_option("--presentation", pres_arg)->required();
  pbw_check->add_option("--order", order_arg, "deglex|lex");
  pbw_check->add_flag("--json", json);
  CLI::App* pbw_nf = pbw->add_subcommand("nf", "normal form of an expression");
  pbw_nf->add_option("--presentation", pres_arg)->required();
  pbw_nf->add_option("--expr", expr_arg)->required();
  pbw_nf->add_option("--order", order_arg);
  CLI::App* pbw_mul = pbw->add_subcommand("mul", "normal form of a product");
  pbw_mul->add_option("--presentation", pres_arg)->required();
  pbw_mul->add_option("--lhs", lhs_arg)->required();
  pbw_mul->add_option("--rhs", rhs_arg)->required();
  pbw_mul->add_option("--order", order_arg);

  CLI::App* verify_cmd = app.add_subcommand("verify", "theorem verification harness");
  verify_cmd->add_option("--theorem", theorem_arg, "see `verify --list`");
  verify_cmd->add_flag("--list", "list supported theorem ids");
  verify_cmd->add_option("--presentation", pres_arg);
  verify_cmd->add_option("--max-terms", max_terms);
  verify_cmd->add_option("--max-deg", max_deg);
  verify_cmd->add_option("--mode", mode_arg, "exhaustive|seeded");
  verify_cmd->add_option("--samples", samples);
  verify_cmd->add_option("--seed", seed);
  verify_cmd->add_option("--word-len", word_len);
  verify_cmd->add_option("--ideal", ideal_gens,
                         "ideal generator labels (quotient theorems)");
  verify_cmd->add_option("--order", order_arg);
  verify_cmd->add_flag("--json", json);

  CLI::App* catalog = app.add_subcommand("catalog", "named presentations");
  CLI::App* catalog_list = catalog->add_subcommand("list", "entry summaries");
  catalog_list->add_flag("--json", json);
  CLI::App* catalog_emit =
      catalog->add_subcommand("emit", "write a presentation config file");
  catalog_emit->add_option("name", emit_name, "catalog entry")->required();
  catalog_emit->add_option("--param,--params", emit_params, "key=value overrides");
  catalog_emit->add_option("--out", out_path, "output path (default stdout)");

  std::vector<const char*> argv;
  argv.push_back("skewpbw");
  for (const auto& a : args) argv.push_back(a.c_str());
  try {
    app.parse(static_cast<int>(argv.size()), argv.data());
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e, out, err) == 0 ? 0 : 3;
  } catch (const CLI::ParseError& e) {
    app.exit(e, out, err);
    return 3;
  }

  try {
    if (ring_validate->parsed()) {
      bool ok = true;
      std::string message = "ok";
      try {
        RingPtr R = ring_of_spec(cli::resolve_ring_spec(spec_arg));
        ValidationResult v = validate_ring(*R);
        ok = v.ok;
        if (!v.ok) message = "fails " + v.axiom + " at " + describe_elems(*R, v.witness);
      } catch (const Error& e) {
        ok = false;
        message = e.what();
      }
      if (json)
        out << nlohmann::json{{"schema", 1}, {"ok", ok}, {"message", message}}.dump(2)
            << "\n";
      else
        out << message << "\n";
      return ok ? 0 : 1;
    }

    if (ring_props->parsed()) {
      auto prop = property_by_name(prop_arg);
      if (!prop) throw Error("unknown property: " + prop_arg);
      RingPtr R = ring_of_spec(cli::resolve_ring_spec(spec_arg));
      PropertyCheck r = check_property(*R, *prop, cap);
      if (json) {
        nlohmann::json j{{"schema", 1}, {"property", prop_arg}, {"holds", r.holds}};
        if (!r.holds) j["witness"] = describe_elems(*R, r.witness);
        out << j.dump(2) << "\n";
      } else {
        out << (r.holds ? "true" : "false") << "\n";
        if (!r.holds) out << "witness: " << describe_elems(*R, r.witness) << "\n";
      }
      return r.holds ? 0 : 1;
    }

    if (sys_check->parsed()) {
      PresPtr P = cli::resolve_presentation(pres_arg);
      const auto& S = P->system;
      nlohmann::json j{{"schema", 1}};
      std::ostringstream text;
      bool maps_ok = true;
      for (std::size_t i = 0; i < S.n; ++i) {
        ValidationResult vs = validate_endo(S.sigmas[i]);
        ValidationResult vd = validate_derivation(S.deltas[i]);
        maps_ok = maps_ok && vs.ok && vd.ok;
        text << "sigma_" << i + 1 << ": " << (vs.ok ? "valid" : "invalid: " + vs.axiom)
             << "\n";
        text << "delta_" << i + 1 << ": " << (vd.ok ? "valid" : "invalid: " + vd.axiom)
             << "\n";
        j["maps"].push_back({{"sigma_valid", vs.ok}, {"delta_valid", vd.ok}});
      }
      auto sc = is_sigma_compatible(S, word_len, cap);
      auto dc = is_delta_compatible(S, word_len, cap);
      auto comp = is_compatible(S, word_len, cap);
      auto rigid = is_sigma_rigid(S, word_len, cap);
      auto wsd = is_weak_sigma_delta_symmetric(S, cap);
      auto line = [&](const char* name, const PredicateResult& r) {
        text << name << ": " << (r.holds ? "true" : "false");
        if (!r.holds) text << " -- " << r.describe(*P->ring);
        text << "\n";
        j[name] = r.holds;
        if (!r.holds) j[std::string(name) + "_witness"] = r.describe(*P->ring);
      };
      line("sigma_compatible", sc);
      line("delta_compatible", dc);
      line("compatible", comp);
      line("sigma_rigid", rigid);
      line("weak_sigma_delta_symmetric_forward",
           wsd.sigma_forward.holds ? wsd.delta_forward : wsd.sigma_forward);
      line("weak_sigma_symmetric_reverse", wsd.sigma_reverse);
      text << "weak_sigma_delta_symmetric: " << (wsd.holds ? "true" : "false") << "\n";
      j["weak_sigma_delta_symmetric"] = wsd.holds;
      out << (json ? j.dump(2) + "\n" : text.str());
      return maps_ok ? 0 : 1;
    }

    if (pbw_check->parsed()) {
      PresPtr P = cli::reorder(cli::resolve_presentation(pres_arg), order_arg);
      PresentationCheck chk = check_presentation(P);
      if (json) {
        nlohmann::json j{{"schema", 1},
                         {"ok", chk.ok},
                         {"quasi_commutative", P->quasi_commutative},
                         {"endomorphism_type", P->endomorphism_type},
                         {"bijective", P->bijective},
                         {"constants_central", P->constants_central}};
        if (!chk.ok) j["error"] = chk.error;
        out << j.dump(2) << "\n";
      } else if (chk.ok) {
        out << "ok (quasi_commutative=" << P->quasi_commutative
            << " endomorphism_type=" << P->endomorphism_type
            << " bijective=" << P->bijective
            << " constants_central=" << P->constants_central << ")\n";
      } else {
        out << chk.error << "\n";
        if (!chk.nf_left.empty())
          out << "  left normal form:  " << chk.nf_left << "\n"
              << "  right normal form: " << chk.nf_right << "\n";
      }
      return chk.ok ? 0 : 1;
    }

    if (pbw_nf->parsed() || pbw_mul->parsed()) {
      PresPtr P = cli::reorder(cli::resolve_presentation(pres_arg), order_arg);
      PresentationCheck chk = check_presentation(P);
      if (!chk.ok)
        throw Error("presentation fails its diamond check: " + chk.error);
      if (pbw_nf->parsed()) {
        out << poly_to_string(parse_expr(P, expr_arg)) << "\n";
      } else {
        SkewPoly f = parse_expr(P, lhs_arg);
        SkewPoly g = parse_expr(P, rhs_arg);
        out << poly_to_string(mul(f, g)) << "\n";
      }
      return 0;
    }

    if (verify_cmd->parsed()) {
      if (verify_cmd->count("--list")) {
        for (const auto& id : supported_theorems()) out << id << "\n";
        return 0;
      }
      if (theorem_arg.empty() || pres_arg.empty())
        throw Error("verify needs --theorem and --presentation");
      PresPtr P = cli::reorder(cli::resolve_presentation(pres_arg), order_arg);
      PresentationCheck chk = check_presentation(P);
      if (!chk.ok)
        throw Error("presentation fails its diamond check: " + chk.error);
      Budget b;
      b.max_terms = max_terms;
      b.max_deg = max_deg;
      if (mode_arg == "exhaustive")
        b.mode = Budget::Mode::exhaustive;
      else if (mode_arg == "seeded")
        b.mode = Budget::Mode::seeded;
      else
        throw Error("unknown mode: " + mode_arg);
      b.sample_count = samples;
      b.seed = seed;
      b.word_len = word_len;
      b.ideal_gens = ideal_gens;
      VerificationReport rep = verify(theorem_arg, P, b);
      out << (json ? report_to_json(rep).dump(2) + "\n" : report_to_text(rep));
      return verdict_exit_code(rep.verdict);
    }

    if (catalog_list->parsed()) {
      if (json) {
        nlohmann::json j = nlohmann::json::array();
        for (const auto& e : list_entries()) {
          nlohmann::json params = nlohmann::json::array();
          for (const auto& [k, d] : e.param_schema)
            params.push_back({{"name", k}, {"default", d}});
          j.push_back({{"name", e.name}, {"summary", e.summary}, {"params", params}});
        }
        out << j.dump(2) << "\n";
      } else {
        for (const auto& e : list_entries()) {
          out << e.name << " -- " << e.summary;
          if (!e.param_schema.empty()) {
            out << " (params:";
            for (const auto& [k, d] : e.param_schema) out << " " << k << "=" << d;
            out << ")";
          }
          out << "\n";
        }
      }
      return 0;
    }

    if (catalog_emit->parsed()) {
      Params params;
      for (const auto& kv : emit_params) {
        auto eq = kv.find('=');
        if (eq == std::string::npos)
          throw Error("--param expects key=value, got " + kv);
        params[kv.substr(0, eq)] = kv.substr(eq + 1);
      }
      std::string text = emit_presentation_config(emit_name, params);
      if (out_path.empty()) {
        out << text;
      } else {
        std::ofstream f(out_path);
        if (!f) throw Error("cannot write " + out_path);
        f << text;
        out << "wrote " << out_path << "\n";
      }
      return 0;
    }
  } catch (const Error& e) {
    err << "error: " << e.what() << "\n";
    return 3;
  } catch (const std::exception& e) {
    err << "error: " << e.what() << "\n";
    return 3;
  }
  err << "error: no command\n";
  return 3;
}

}  // namespace skewpbw
