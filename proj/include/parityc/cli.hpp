#pragma once

// Command-line front end.  Exit codes:
//   0  success
//   1  a verification suite reported failures
//   2  an enumeration exceeded its node budget
//   3  the requested extension table is not associative
//   4  the normal subgroup admits no morphic splitting
//   64 usage / flag parse errors
//   65 invalid input (bad tables, malformed files, unknown names)
// The node budget defaults to 10^7 and can be overridden by --budget or the
// PARITYC_BUDGET environment variable.

#include <algorithm>
#include <cstdlib>
#include <ostream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "io.hpp"
#include "verify.hpp"

namespace parityc {

inline long long env_budget() {
  if (const char* s = std::getenv("PARITYC_BUDGET")) {
    char* end = nullptr;
    const long long v = std::strtoll(s, &end, 10);
    if (end && *end == '\0' && v > 0) return v;
  }
  return kDefaultBudget;
}

namespace detail {

inline std::vector<int> parse_int_list(const std::string& s) {
  std::vector<int> out;
  std::string cur;
  for (char ch : s + ",") {
    if (ch == ',') {
      if (!cur.empty()) out.push_back(std::stoi(cur));
      cur.clear();
    } else if ((ch >= '0' && ch <= '9') || ch == '-') {
      cur += ch;
    } else {
      fail(errc::bad_input, "expected a comma-separated integer list, got: " + s);
    }
  }
  return out;
}

inline void emit(std::ostream& out, const std::string& path, const std::string& text) {
  if (path.empty())
    out << text;
  else
    write_text_file(path, text);
}

}  // namespace detail

inline int cli_run(std::vector<std::string> args, std::ostream& out) {
  CLI::App app{"parity quasicomplex toolkit: groups, cochains, censuses, extensions"};
  app.require_subcommand(1);

  std::string group, base, fiber, scope = "all", suite, action = "trivial";
  std::string format = "json", out_path, cochain_path, mode = "holonomy", normal;
  int degree = 2, shards = 1;
  std::uint64_t seed = 42;
  long long samples = 10000;
  long long budget = env_budget();
  bool weak = false;

  auto add_budget = [&](CLI::App* sub) {
    sub->add_option("--budget", budget, "enumeration node budget");
  };

  auto* validate = app.add_subcommand("validate", "check a group spec and print its shape");
  validate->add_option("--group", group, "builtin name, JSON file, or inline JSON")->required();

  auto* aut = app.add_subcommand("aut", "automorphism group of a group spec");
  aut->add_option("--group", group)->required();

  auto* census = app.add_subcommand("census", "cocycle counts, classes, and strata");
  census->add_option("--base", base)->required();
  census->add_option("--fiber", fiber)->required();
  census->add_option("--degree", degree, "cochain degree (0..3)");
  census->add_option("--scope", scope, "all | trivial | actions | <index>");
  census->add_option("--shards", shards, "parallel enumeration shards");
  census->add_flag("--weak", weak, "also count cross-fiber weak classes");
  census->add_option("--format", format, "json | tsv");
  census->add_option("--out", out_path, "write the report to a file");
  add_budget(census);

  auto* extend = app.add_subcommand("extend", "build the magma table of a 2-cochain");
  extend->add_option("--cochain", cochain_path, "cochain JSON file");
  extend->add_option("--base", base, "base group (identity cochain mode)");
  extend->add_option("--fiber", fiber, "fiber group (identity cochain mode)");
  extend->add_option("--action", action, "trivial | invert (identity cochain mode)");
  extend->add_option("--mode", mode, "holonomy | full fiber");
  extend->add_option("--out", out_path, "write the table to a file");

  auto* split = app.add_subcommand("split", "morphic splittings of a group extension");
  split->add_option("--group", group, "the total group")->required();
  split->add_option("--normal", normal, "comma-separated generators of the normal subgroup")
      ->required();
  split->add_option("--format", format, "json | text");
  add_budget(split);

  auto* verify = app.add_subcommand("verify", "run one named verification suite");
  verify->add_option("--suite", suite)->required();
  verify->add_option("--seed", seed, "seed for sampled sweeps");
  verify->add_option("--samples", samples, "samples per sampled instance");
  verify->add_option("--shards", shards, "parallel enumeration shards");
  verify->add_option("--format", format, "json | text");
  add_budget(verify);

  auto* report = app.add_subcommand("report", "run every suite and emit the full JSON report");
  report->add_option("--seed", seed);
  report->add_option("--samples", samples);
  report->add_option("--shards", shards);
  report->add_option("--out", out_path, "write the report to a file");
  add_budget(report);

  try {
    std::reverse(args.begin(), args.end());
    app.parse(args);
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return 0;
  } catch (const CLI::ParseError& pe) {
    out << "usage error: " << pe.what() << "\n";
    return 64;
  }

  try {
    if (validate->parsed()) {
      auto G = resolve_group(group);
      out << "group: " << G->name << "\n";
      out << "order: " << G->n << "\n";
      out << "abelian: " << (G->abelian ? "yes" : "no") << "\n";
      out << "center: " << center(*G).size() << "\n";
      out << "order_profile:";
      for (auto [ord, count] : order_profile(*G)) out << " " << ord << "^" << count;
      out << "\n";
      return 0;
    }
    if (aut->parsed()) {
      auto G = resolve_group(group);
      auto A = automorphism_group(G);
      out << "group: " << G->name << "\n";
      out << "aut_order: " << A.size() << "\n";
      out << "inner: " << A.inner_indices().size() << "\n";
      return 0;
    }
    if (census->parsed()) {
      auto r = cocycle_census(resolve_group(base), resolve_group(fiber), degree, scope, budget,
                              shards, weak);
      if (format == "tsv")
        detail::emit(out, out_path, census_to_tsv(r));
      else
        detail::emit(out, out_path, census_to_json(r).dump(2) + "\n");
      return 0;
    }
    if (extend->parsed()) {
      Cochain c;
      if (!cochain_path.empty()) {
        c = cochain_from_json(ojson::parse(read_text_file(cochain_path)));
      } else {
        if (base.empty() || fiber.empty())
          fail(errc::bad_input, "extend needs --cochain or both --base and --fiber");
        auto G = resolve_group(base), N = resolve_group(fiber);
        Quasiaction L = action == "invert" ? detail::inversion_action(G, N)
                                           : trivial_quasiaction(G, N);
        if (action != "invert" && action != "trivial")
          fail(errc::bad_input, "--action must be trivial or invert");
        c = identity_cochain(L, 2);
      }
      if (mode != "holonomy" && mode != "full")
        fail(errc::bad_input, "--mode must be holonomy or full");
      auto E = build_quasi_extension(c, mode == "full" ? FiberMode::full : FiberMode::holonomy);
      detail::emit(out, out_path, extension_to_json(E).dump(2) + "\n");
      return E.associative ? 0 : 3;
    }
    if (split->parsed()) {
      auto G = resolve_group(group);
      auto members = generated_subgroup(*G, detail::parse_int_list(normal));
      auto rep = classify_splittings(G, members, budget);
      if (format == "json") {
        ojson j;
        j["schema"] = 1;
        j["kind"] = "splittings";
        j["group"] = G->name;
        j["normal"] = rep.fiber.members;
        j["quotient_order"] = rep.quotient.group->n;
        j["sections"] = rep.sections;
        j["classes"] = rep.class_count;
        j["class_reps"] = rep.class_reps;
        j["h1"] = rep.h1;
        detail::emit(out, out_path, j.dump(2) + "\n");
      } else {
        std::ostringstream txt;
        txt << "group: " << G->name << "\n";
        txt << "normal:";
        for (int m : rep.fiber.members) txt << " " << m;
        txt << "\nsections: " << rep.sections.size() << "\n";
        txt << "classes: " << rep.class_count << "\n";
        txt << "h1: " << rep.h1 << "\n";
        detail::emit(out, out_path, txt.str());
      }
      return 0;
    }
    if (verify->parsed()) {
      auto s = run_suite(suite, seed, samples, shards, budget);
      if (format == "json") {
        out << suite_to_json(s).dump(2) << "\n";
      } else {
        out << "suite: " << s.name << "\n";
        out << "pass: " << (s.pass ? "yes" : "no") << "\n";
        out << "checks: " << s.checks << "\n";
        for (const auto& f : s.failures) out << "failure: " << f << "\n";
      }
      return s.pass ? 0 : 1;
    }
    if (report->parsed()) {
      auto j = full_report(seed, samples, shards, budget);
      detail::emit(out, out_path, j.dump(2) + "\n");
      return j["pass"].get<bool>() ? 0 : 1;
    }
  } catch (const error& err) {
    out << err.what() << "\n";
    switch (err.code) {
      case errc::budget_exceeded: return 2;
      case errc::no_splitting_found: return 4;
      default: return 65;
    }
  } catch (const std::exception& ex) {
    out << "error: " << ex.what() << "\n";
    return 65;
  }
  return 64;
}

}  // namespace parityc
