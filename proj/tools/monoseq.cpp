// SPDX-FileCopyrightText: (c) 2026 The monoseq authors
//
// SPDX-License-Identifier: Apache-2.0

// monoseq command-line front end. Talks to the library only through the C
// interface in monoseq/monoseq.h.

#include <cstdint>
#include <cstdlib>
#include <fstream>
#include <iostream>
#include <functional>
#include <iterator>
#include <map>
#include <memory>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include "monoseq/monoseq.h"

namespace {

using Json = nlohmann::ordered_json;

constexpr int kExitUsage = 64;

struct Failure {
  int code;
  std::string message;
  std::string partial;
};

void check(monoseq_status status) {
  if (status != MONOSEQ_OK) {
    throw Failure{static_cast<int>(status), monoseq_last_error(), monoseq_last_partial()};
  }
}

std::string take(char* s) {
  std::string out(s);
  monoseq_string_free(s);
  return out;
}

template <typename F>
Json call_json(F&& f) {
  char* out = nullptr;
  check(f(&out));
  return Json::parse(take(out));
}

struct PermDeleter {
  void operator()(monoseq_perm* p) const { monoseq_perm_free(p); }
};
struct PosetDeleter {
  void operator()(monoseq_poset* p) const { monoseq_poset_free(p); }
};
using PermPtr = std::unique_ptr<monoseq_perm, PermDeleter>;
using PosetPtr = std::unique_ptr<monoseq_poset, PosetDeleter>;

// Everything a run depends on, after flags > environment > defaults.
struct Settings {
  std::string format;  // empty: command default
  std::string input;
  std::string out;
  int workers = 1;
  std::optional<std::uint64_t> budget;
  std::uint64_t seed = 0;
  bool timing = false;
};

std::optional<long long> env_integer(const char* name) {
  const char* raw = std::getenv(name);
  if (raw == nullptr || *raw == '\0') {
    return std::nullopt;
  }
  try {
    std::size_t used = 0;
    const long long v = std::stoll(raw, &used);
    if (used == std::string(raw).size() && v > 0) {
      return v;
    }
  } catch (const std::exception&) {
  }
  throw Failure{MONOSEQ_INVALID, std::string(name) + " must be a positive integer", {}};
}

std::string read_input(const Settings& s) {
  if (!s.input.empty() && s.input != "-") {
    std::ifstream in(s.input);
    if (!in) {
      throw Failure{MONOSEQ_INVALID, "cannot read " + s.input, {}};
    }
    return {std::istreambuf_iterator<char>(in), {}};
  }
  return {std::istreambuf_iterator<char>(std::cin), {}};
}

void strip_timing(Json& j) {
  if (j.is_object()) {
    j.erase("elapsed_seconds");
    for (auto& [key, value] : j.items()) {
      strip_timing(value);
    }
  } else if (j.is_array()) {
    for (auto& value : j) {
      strip_timing(value);
    }
  }
}

class Runner {
 public:
  Settings settings;
  Json config = Json::object();

  void write(const std::string& text) const {
    if (settings.out.empty()) {
      std::cout << text;
      return;
    }
    std::ofstream out(settings.out);
    if (!out) {
      throw Failure{MONOSEQ_INVALID, "cannot write " + settings.out, {}};
    }
    out << text;
  }

  std::string format(const std::string& fallback) const {
    if (!settings.format.empty()) {
      return settings.format;
    }
    if (settings.out.size() > 4 && settings.out.ends_with(".csv")) {
      return "csv";
    }
    return fallback;
  }

  void emit_json(Json body) const {
    if (!settings.timing) {
      strip_timing(body);
    }
    Json out;
    out["config"] = config;
    for (auto& [key, value] : body.items()) {
      out[key] = value;
    }
    write(out.dump(2) + "\n");
  }

  // Plain and CSV outputs carry the config on stderr, or as a comment line
  // when going to a file.
  void emit_text(const std::string& text, bool comment_header) const {
    const std::string line = "# config: " + config.dump() + "\n";
    if (comment_header || !settings.out.empty()) {
      write(line + text);
    } else {
      std::cerr << line;
      write(text);
    }
  }

  std::uint64_t budget_or(std::uint64_t fallback) {
    const std::uint64_t b = settings.budget.value_or(fallback);
    config["budget"] = b;
    return b;
  }

  monoseq_search_options search_options(bool symmetry) {
    monoseq_search_options opts;
    monoseq_search_options_init(&opts);
    opts.budget = budget_or(opts.budget);
    opts.workers = settings.workers;
    opts.use_symmetry = symmetry ? 1 : 0;
    config["workers"] = settings.workers;
    config["symmetry"] = symmetry;
    return opts;
  }

  void require_format(std::initializer_list<const char*> allowed, const std::string& f) {
    for (const char* a : allowed) {
      if (f == a) {
        config["format"] = f;
        return;
      }
    }
    throw CLI::ValidationError("--format", "format '" + f + "' is not available here");
  }
};

void count_command(Runner& r, int k, int profile, bool oracle) {
  const std::string text = read_input(r.settings);
  PermPtr perm;
  {
    monoseq_perm* p = nullptr;
    monoseq_poset* q = nullptr;
    check(monoseq_parse_input(text.c_str(), &p, &q));
    PosetPtr guard(q);
    perm.reset(p);
    if (!perm) {
      throw Failure{MONOSEQ_INVALID, "count expects a permutation", {}};
    }
  }
  const std::string f = r.format("json");
  r.require_format({"json", "plain"}, f);
  r.config["k"] = k;
  r.config["oracle"] = oracle;
  Json report;
  if (oracle) {
    const auto budget = r.budget_or(50'000'000);
    report = call_json([&](char** o) { return monoseq_count_oracle_json(perm.get(), k, budget, o); });
  } else {
    report = call_json([&](char** o) { return monoseq_count_json(perm.get(), k, o); });
  }
  if (profile > 0) {
    r.config["profile"] = profile;
    report["profile"] = call_json(
        [&](char** o) { return monoseq_profile_json(perm.get(), profile, o); })["per_length"];
  }
  if (f == "json") {
    r.emit_json(report);
    return;
  }
  std::ostringstream out;
  out << "increasing " << report["increasing"] << "\ndecreasing " << report["decreasing"]
      << "\ntotal " << report["total"] << "\n";
  r.emit_text(out.str(), false);
}

void construct_command(Runner& r, const std::string& which, int k, int n, int variant) {
  PermPtr perm;
  monoseq_perm* p = nullptr;
  r.config["family"] = which;
  r.config["k"] = k;
  if (which == "tau") {
    r.config["n"] = n;
    check(monoseq_perm_tau(k, n, &p));
  } else {
    r.config["variant"] = variant;
    check(monoseq_perm_sigma(k, variant, &p));
  }
  perm.reset(p);
  const std::string f = r.format("plain");
  r.require_format({"json", "plain"}, f);
  if (f == "json") {
    char* out = nullptr;
    check(monoseq_perm_to_json(perm.get(), &out));
    r.emit_json(Json::parse(take(out)));
    return;
  }
  char* out = nullptr;
  check(monoseq_perm_to_text(perm.get(), &out));
  r.emit_text(take(out) + "\n", false);
}

void formula_command(Runner& r, int k, int n) {
  r.config["k"] = k;
  r.config["n"] = n;
  const std::string f = r.format("json");
  r.require_format({"json", "plain"}, f);
  Json j = call_json([&](char** o) { return monoseq_formula_json(k, n, o); });
  if (f == "json") {
    r.emit_json(j);
    return;
  }
  std::ostringstream out;
  for (const char* key : {"m_tau", "ell", "q", "r", "delta"}) {
    out << key << ' ' << j[key] << "\n";
  }
  r.emit_text(out.str(), false);
}

PosetPtr read_poset(Runner& r) {
  const std::string text = read_input(r.settings);
  monoseq_perm* p = nullptr;
  monoseq_poset* q = nullptr;
  check(monoseq_parse_input(text.c_str(), &p, &q));
  PermPtr perm(p);
  PosetPtr poset(q);
  if (perm) {
    check(monoseq_poset_from_perm(perm.get(), &q));
    poset.reset(q);
  }
  return poset;
}

struct PosetArgs {
  int k = 0;
  int t = 1;
  int i = 1;
  int j = 1;
  bool relaxed = false;
};

void poset_command(Runner& r, const std::string& action, const PosetArgs& a) {
  r.require_format({"json"}, r.format("json"));
  PosetPtr p = read_poset(r);
  const monoseq_poset* P = p.get();
  r.config["action"] = action;
  if (a.k > 0) {
    r.config["k"] = a.k;
  }
  Json out;
  if (action == "decompose") {
    out = call_json([&](char** o) { return monoseq_poset_decompose_json(P, o); });
    if (a.k > 0) {
      out["index_sets"] =
          call_json([&](char** o) { return monoseq_poset_index_sets_json(P, a.k, o); });
    }
  } else if (action == "hk") {
    const auto budget = r.budget_or(50'000'000);
    out = call_json([&](char** o) { return monoseq_poset_hk_json(P, a.k, budget, o); });
  } else if (action == "surplus") {
    out = call_json([&](char** o) { return monoseq_poset_summary_json(P, a.k, o); });
  } else if (action == "index-sets") {
    out = call_json([&](char** o) { return monoseq_poset_index_sets_json(P, a.k, o); });
  } else if (action == "cut") {
    out = call_json([&](char** o) { return monoseq_poset_cut_json(P, o); });
  } else if (action == "prune") {
    r.config["t"] = a.t;
    out = call_json([&](char** o) { return monoseq_poset_prune_json(P, a.k, a.t, o); });
  } else if (action == "dual" || action == "reverse") {
    monoseq_poset* q = nullptr;
    check(action == "dual" ? monoseq_poset_dual(P, &q) : monoseq_poset_reverse(P, &q));
    PosetPtr result(q);
    out = call_json([&](char** o) { return monoseq_poset_to_json(result.get(), o); });
  } else if (action == "chain-cover") {
    r.config["i"] = a.i;
    r.config["j"] = a.j;
    r.config["strict"] = !a.relaxed;
    out = call_json([&](char** o) {
      return monoseq_poset_chain_cover_json(P, a.i, a.j, a.k, a.relaxed ? 0 : 1, o);
    });
  } else {
    out = call_json([&](char** o) { return monoseq_poset_verify_example_json(P, a.k, o); });
    r.emit_json(out);
    if (!out["passed"].get<bool>()) {
      throw Failure{MONOSEQ_INVALID, "structure check failed at " +
                                         out["failed_clause"].get<std::string>(), {}};
    }
    return;
  }
  r.emit_json(out);
}

struct LemmaArgs {
  int k = 0;
  int b = 1;
  int c = 1;
  int ell = 1;
  int anchor = 0;
  int t = 1;
  int d = 1;
  int s = 0;
  int path = 0;
  int star = 0;
};

Json tree_document(int path, int star) {
  const int t = path > 0 ? path : star;
  Json edges = Json::array();
  for (int v = 2; v <= t; ++v) {
    edges.push_back({path > 0 ? v - 1 : 1, v});
  }
  return Json{{"t", t}, {"edges", std::move(edges)}};
}

void lemma_command(Runner& r, const std::string& action, const LemmaArgs& a) {
  r.require_format({"json"}, r.format("json"));
  r.config["lemma"] = action;
  Json out;
  if (action == "shadow") {
    r.config["b"] = a.b;
    const std::string text = read_input(r.settings);
    out = call_json([&](char** o) { return monoseq_lemma_shadow_json(text.c_str(), a.b, o); });
  } else if (action == "signatures") {
    const std::string text = read_input(r.settings);
    out = call_json([&](char** o) { return monoseq_lemma_signatures_json(text.c_str(), o); });
  } else if (action == "connected") {
    r.config["c"] = a.c;
    std::string text;
    if (a.path > 0 || a.star > 0) {
      r.config[a.path > 0 ? "path" : "star"] = a.path > 0 ? a.path : a.star;
      text = tree_document(a.path, a.star).dump();
    } else {
      text = read_input(r.settings);
    }
    out = call_json([&](char** o) { return monoseq_lemma_connected_json(text.c_str(), a.c, o); });
  } else {
    PosetPtr p = read_poset(r);
    r.config["k"] = a.k;
    if (action == "signature-bound") {
      r.config["ell"] = a.ell;
      r.config["anchor"] = a.anchor;
      out = call_json([&](char** o) {
        return monoseq_lemma_signature_bound_json(p.get(), a.k, a.ell, a.anchor, o);
      });
    } else if (action == "surplus-bound") {
      r.config["t"] = a.t;
      out = call_json(
          [&](char** o) { return monoseq_lemma_surplus_bound_json(p.get(), a.k, a.t, o); });
    } else {
      r.config["d"] = a.d;
      r.config["s"] = a.s;
      out = call_json([&](char** o) {
        return monoseq_lemma_large_surplus_json(p.get(), a.k, a.d, a.s, o);
      });
    }
  }
  r.emit_json(out);
}

struct SearchArgs {
  int n = 0;
  int k = 0;
  int trials = 1000;
  bool no_symmetry = false;
};

std::string search_csv_row(const Json& search, const Json& formula) {
  std::ostringstream row;
  row << search["n"] << ',' << search["k"] << ',' << search["minimum"] << ','
      << formula["m_tau"] << ',' << (search["minimum"] == formula["m_tau"] ? "true" : "false")
      << "\n";
  return row.str();
}

void search_command(Runner& r, const std::string& action, const SearchArgs& a) {
  r.config["mode"] = action;
  r.config["n"] = a.n;
  r.config["k"] = a.k;
  const std::string f = r.format("json");
  r.require_format({"json", "csv"}, f);
  Json out;
  if (action == "exhaustive" || action == "verify") {
    const auto opts = r.search_options(!a.no_symmetry);
    out = call_json([&](char** o) {
      return action == "verify" ? monoseq_verify_theorem_json(a.n, a.k, &opts, o)
                                : monoseq_search_exhaustive_json(a.n, a.k, &opts, o);
    });
  } else if (action == "heuristic") {
    r.config["trials"] = a.trials;
    r.config["seed"] = r.settings.seed;
    out = call_json([&](char** o) {
      return monoseq_search_heuristic_json(a.n, a.k, a.trials, r.settings.seed, o);
    });
  } else {
    out = call_json([&](char** o) { return monoseq_search_posets_json(a.n, a.k, o); });
  }
  if (f == "json") {
    r.emit_json(out);
  } else {
    const Json formula = call_json([&](char** o) { return monoseq_formula_json(a.k, a.n, o); });
    const Json& search = action == "verify" ? out["search"] : out;
    r.emit_text("n,k,minimum,formula,match\n" + search_csv_row(search, formula), true);
  }
  if (action == "verify" && !out["passed"].get<bool>()) {
    throw Failure{MONOSEQ_INVALID, "theorem check failed", {}};
  }
}

void repro_command(Runner& r) {
  const std::string f = r.format("csv");
  r.require_format({"json", "csv"}, f);
  const auto opts = r.search_options(true);
  const std::vector<std::pair<int, int>> pairs = {{5, 2}, {6, 2}, {7, 2}, {8, 2},
                                                  {9, 2}, {10, 2}, {10, 3}, {11, 3}};
  r.config["pairs"] = pairs;
  Json theorem = Json::array();
  std::ostringstream csv;
  csv << "n,k,exhaustive_min,formula,match,mixed_minimizer_count\n";
  bool ok = true;
  std::map<int, Json> m2;
  for (const auto& [n, k] : pairs) {
    Json report = call_json([&](char** o) { return monoseq_verify_theorem_json(n, k, &opts, o); });
    const Json& s = report["search"];
    csv << n << ',' << k << ',' << s["minimum"] << ',' << report["formula"] << ','
        << (report["matches_formula"].get<bool>() ? "true" : "false") << ','
        << report["mixed_permutations"] << "\n";
    ok = ok && report["passed"].get<bool>();
    if (k == 2) {
      m2[n] = s["minimum"];
    }
    theorem.push_back(Json{{"n", n},
                           {"k", k},
                           {"exhaustive_min", s["minimum"]},
                           {"formula", report["formula"]},
                           {"match", report["matches_formula"]},
                           {"mixed_minimizer_count", report["mixed_permutations"]},
                           {"single_type_holds", report["single_type_holds"]},
                           {"majority_holds", report["majority_holds"]}});
  }
  Json question = Json::array();
  csv << "\nn,k,h_k,m_k,outcome\n";
  for (int n : {5, 6, 7}) {
    Json res = call_json([&](char** o) { return monoseq_search_posets_json(n, 2, o); });
    const auto h = res["minimum"].get<std::uint64_t>();
    const auto m = m2.at(n).get<std::uint64_t>();
    const char* outcome = h == m ? "equal" : (h < m ? "less" : "greater");
    ok = ok && h <= m;
    csv << n << ",2," << h << ',' << m << ',' << outcome << "\n";
    question.push_back(Json{{"n", n}, {"k", 2}, {"h_k", h}, {"m_k", m}, {"outcome", outcome},
                            {"witness", res["witness"]}});
  }
  if (f == "json") {
    r.emit_json(Json{{"theorem", std::move(theorem)}, {"question", std::move(question)}});
  } else {
    r.emit_text(csv.str(), true);
  }
  if (!ok) {
    throw Failure{MONOSEQ_INVALID, "reproduction tables contain a failed check", {}};
  }
}

} // namespace

int main(int argc, char** argv) {
  CLI::App app{"Exact counting and search for monotone subsequences and homogenous sets",
               "monoseq"};
  app.require_subcommand(1);
  app.set_version_flag("--version", monoseq_version());

  Runner r;
  Settings& s = r.settings;
  std::optional<int> workers_flag;
  std::optional<std::uint64_t> budget_flag;
  app.add_option("--format", s.format, "Output format")
      ->check(CLI::IsMember({"json", "plain", "csv"}));
  app.add_option("--input", s.input, "Read input from this file instead of stdin");
  app.add_option("--out", s.out, "Write output to this file");
  app.add_option("--workers", workers_flag, "Search threads (env MONOSEQ_WORKERS)")
      ->check(CLI::PositiveNumber);
  app.add_option("--budget", budget_flag, "Enumeration cap (env MONOSEQ_BUDGET)")
      ->check(CLI::PositiveNumber);
  app.add_option("--seed", s.seed, "Random seed");
  app.add_flag("--timing", s.timing, "Include elapsed times in JSON output");

  std::function<void()> action;

  int k = 0, n = 0, variant = 1, profile = 0;
  bool oracle = false;
  auto* count = app.add_subcommand("count", "Monotone (k+1)-subsequence counts");
  count->add_option("--k", k)->required()->check(CLI::PositiveNumber);
  count->add_option("--profile", profile, "Also report every length up to this one")
      ->check(CLI::Range(2, 1 << 20));
  count->add_flag("--oracle", oracle, "Use the subset-enumeration counter");
  count->fallthrough();
  count->callback([&] { action = [&] { count_command(r, k, profile, oracle); }; });

  auto* construct = app.add_subcommand("construct", "Build tau or sigma");
  construct->require_subcommand(1);
  construct->fallthrough();
  auto* tau = construct->add_subcommand("tau", "Stacked increasing blocks");
  tau->add_option("--k", k)->required();
  tau->add_option("--n", n)->required();
  tau->fallthrough();
  tau->callback([&] { action = [&] { construct_command(r, "tau", k, n, 0); }; });
  auto* sigma = construct->add_subcommand("sigma", "Mixed-type permutation on k^2+k+1 points");
  sigma->add_option("--k", k)->required();
  sigma->add_option("--variant", variant)->required();
  sigma->fallthrough();
  sigma->callback([&] { action = [&] { construct_command(r, "sigma", k, 0, variant); }; });

  auto* formula = app.add_subcommand("formula", "Closed-form values for tau");
  formula->add_option("--k", k)->required();
  formula->add_option("--n", n)->required();
  formula->fallthrough();
  formula->callback([&] { action = [&] { formula_command(r, k, n); }; });

  PosetArgs pa;
  auto* poset = app.add_subcommand("poset", "Poset statistics (JSON poset or permutation input)");
  poset->require_subcommand(1);
  poset->fallthrough();
  for (const char* name : {"decompose", "hk", "surplus", "index-sets", "cut", "prune", "dual",
                           "reverse", "chain-cover", "verify-example"}) {
    auto* sub = poset->add_subcommand(name);
    const std::string action_name = name;
    auto* kopt = sub->add_option("--k", pa.k)->check(CLI::PositiveNumber);
    if (action_name == "hk" || action_name == "index-sets" || action_name == "prune" ||
        action_name == "chain-cover" || action_name == "verify-example") {
      kopt->required();
    }
    if (action_name == "prune") {
      sub->add_option("--t", pa.t)->required();
    }
    if (action_name == "chain-cover") {
      sub->add_option("--i", pa.i)->required();
      sub->add_option("--j", pa.j)->required();
      sub->add_flag("--relaxed", pa.relaxed, "Run even if the level sizes differ from k");
    }
    sub->fallthrough();
    sub->callback([&, action_name] { action = [&, action_name] { poset_command(r, action_name, pa); }; });
  }

  LemmaArgs la;
  auto* lemma = app.add_subcommand("lemma", "Auxiliary lemma checkers");
  lemma->require_subcommand(1);
  lemma->fallthrough();
  {
    auto* sub = lemma->add_subcommand("shadow", "Lower shadow of a set family");
    sub->add_option("--b", la.b)->required();
    sub->fallthrough();
    sub->callback([&] { action = [&] { lemma_command(r, "shadow", la); }; });
    sub = lemma->add_subcommand("signatures", "Distinguishing column sets");
    sub->fallthrough();
    sub->callback([&] { action = [&] { lemma_command(r, "signatures", la); }; });
    sub = lemma->add_subcommand("connected", "Connected c-subsets of a tree");
    sub->add_option("--c", la.c)->required();
    auto* path = sub->add_option("--path", la.path, "Use the path on this many vertices");
    sub->add_option("--star", la.star, "Use the star on this many vertices")->excludes(path);
    sub->fallthrough();
    sub->callback([&] { action = [&] { lemma_command(r, "connected", la); }; });
    sub = lemma->add_subcommand("signature-bound", "Chain count from maximum chains");
    sub->add_option("--k", la.k)->required();
    sub->add_option("--ell", la.ell)->required();
    sub->add_option("--anchor", la.anchor, "1-based element the chains must contain");
    sub->fallthrough();
    sub->callback([&] { action = [&] { lemma_command(r, "signature-bound", la); }; });
    sub = lemma->add_subcommand("surplus-bound", "Homogenous sets from surplus");
    sub->add_option("--k", la.k)->required();
    sub->add_option("--t", la.t)->required();
    sub->fallthrough();
    sub->callback([&] { action = [&] { lemma_command(r, "surplus-bound", la); }; });
    sub = lemma->add_subcommand("large-surplus", "Antichains or maximum chains from surplus");
    sub->add_option("--k", la.k)->required();
    sub->add_option("--d", la.d)->required();
    sub->add_option("--s", la.s)->required();
    sub->fallthrough();
    sub->callback([&] { action = [&] { lemma_command(r, "large-surplus", la); }; });
  }

  SearchArgs sa;
  auto* search = app.add_subcommand("search", "Minimization over permutations or posets");
  search->require_subcommand(1);
  search->fallthrough();
  for (const char* name : {"exhaustive", "verify", "heuristic", "posets"}) {
    auto* sub = search->add_subcommand(name);
    const std::string action_name = name;
    sub->add_option("--n", sa.n)->required();
    sub->add_option("--k", sa.k)->required();
    if (action_name == "heuristic") {
      sub->add_option("--trials", sa.trials)->check(CLI::NonNegativeNumber);
    }
    if (action_name == "exhaustive" || action_name == "verify") {
      sub->add_flag("--no-symmetry", sa.no_symmetry, "Enumerate all of S_n");
    }
    sub->fallthrough();
    sub->callback([&, action_name] { action = [&, action_name] { search_command(r, action_name, sa); }; });
  }

  auto* repro = app.add_subcommand("repro", "Regenerate the comparison tables");
  repro->fallthrough();
  repro->callback([&] { action = [&] { repro_command(r); }; });

  try {
    app.parse(argc, argv);
  } catch (const CLI::Success& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e, std::cerr, std::cerr);
    return kExitUsage;
  }

  try {
    const auto env_workers = env_integer("MONOSEQ_WORKERS");
    const auto env_budget = env_integer("MONOSEQ_BUDGET");
    s.workers = workers_flag ? *workers_flag : env_workers ? static_cast<int>(*env_workers) : 1;
    if (budget_flag) {
      s.budget = budget_flag;
    } else if (env_budget) {
      s.budget = static_cast<std::uint64_t>(*env_budget);
    }
    std::string command;
    for (const CLI::App* sub = &app; !sub->get_subcommands().empty();) {
      sub = sub->get_subcommands().front();
      command += (command.empty() ? "" : " ") + sub->get_name();
    }
    r.config["command"] = command;
    r.config["workers"] = s.workers;
    r.config["seed"] = s.seed;
    if (!s.input.empty()) {
      r.config["input"] = s.input;
    }
    action();
  } catch (const CLI::ParseError& e) {
    std::cerr << "monoseq: " << e.what() << "\n" << app.help();
    return kExitUsage;
  } catch (const Failure& f) {
    std::cerr << "monoseq: " << f.message << "\n";
    if (!f.partial.empty()) {
      std::cout << f.partial << "\n";
    }
    return f.code;
  }
  return 0;
}
