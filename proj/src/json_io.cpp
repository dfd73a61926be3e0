// SPDX-FileCopyrightText: (c) 2026 The monoseq authors
//
// SPDX-License-Identifier: Apache-2.0

#include "monoseq/json_io.hpp"

#include <limits>

#include "monoseq/error.hpp"
#include "monoseq/search.hpp"

namespace monoseq::json_io {

namespace {

Json one_based(const std::vector<int>& items) {
  Json out = Json::array();
  for (int x : items) {
    out.push_back(x + 1);
  }
  return out;
}

Json one_based_lists(const std::vector<std::vector<int>>& lists) {
  Json out = Json::array();
  for (const auto& list : lists) {
    out.push_back(one_based(list));
  }
  return out;
}

Json counts(const std::vector<BigCount>& values) {
  Json out = Json::array();
  for (const auto& v : values) {
    out.push_back(count(v));
  }
  return out;
}

std::vector<int> int_array(const Json& j, const char* what) {
  if (!j.is_array()) {
    throw InvalidArgument(std::string(what) + " must be an array of integers");
  }
  std::vector<int> out;
  for (const auto& v : j) {
    if (!v.is_number_integer()) {
      throw InvalidArgument(std::string(what) + " must contain integers only");
    }
    out.push_back(v.get<int>());
  }
  return out;
}

int require_int(const Json& j, const char* key) {
  if (!j.contains(key) || !j.at(key).is_number_integer()) {
    throw InvalidArgument(std::string("missing integer field '") + key + "'");
  }
  return j.at(key).get<int>();
}

} // namespace

Json count(const BigCount& value) {
  if (value >= 0 && value <= std::numeric_limits<std::uint64_t>::max()) {
    return value.convert_to<std::uint64_t>();
  }
  return to_string(value);
}

Json rational(const Rational& value) {
  return Json{{"numerator", count(numerator(value))},
              {"denominator", count(denominator(value))},
              {"approx", static_cast<double>(value)}};
}

Permutation permutation_from_json(const Json& j) {
  if (j.is_array()) {
    return Permutation::from_one_based(int_array(j, "permutation"));
  }
  if (!j.is_object() || !j.contains("values")) {
    throw InvalidArgument("permutation JSON needs a 'values' array");
  }
  auto values = int_array(j.at("values"), "values");
  if (j.contains("n") && require_int(j, "n") != static_cast<int>(values.size())) {
    throw InvalidArgument("'n' does not match the number of values");
  }
  return Permutation::from_one_based(values);
}

Poset poset_from_json(const Json& j) {
  if (!j.is_object()) {
    throw InvalidArgument("poset JSON must be an object");
  }
  std::optional<Permutation> witness;
  if (j.contains("witness") && !j.at("witness").is_null()) {
    witness = permutation_from_json(j.at("witness"));
  }
  int n = 0;
  if (j.contains("n")) {
    n = require_int(j, "n");
  } else if (witness) {
    n = static_cast<int>(witness->size());
  } else {
    throw InvalidArgument("poset JSON needs 'n'");
  }
  if (n < 0) {
    throw InvalidArgument("'n' must be nonnegative");
  }
  std::vector<std::pair<int, int>> pairs;
  if (j.contains("relation")) {
    const Json& rel = j.at("relation");
    if (!rel.is_array()) {
      throw InvalidArgument("'relation' must be an array of pairs");
    }
    for (const auto& pair : rel) {
      const auto ab = int_array(pair, "relation pair");
      if (ab.size() != 2) {
        throw InvalidArgument("relation entries must be [i, j] pairs");
      }
      if (ab[0] < 1 || ab[0] > n || ab[1] < 1 || ab[1] > n) {
        throw InvalidArgument("relation element out of range 1.." + std::to_string(n));
      }
      pairs.emplace_back(ab[0] - 1, ab[1] - 1);
    }
  }
  if (!witness) {
    return Poset::from_relation(n, pairs);
  }
  if (static_cast<int>(witness->size()) != n) {
    throw InvalidArgument("witness length differs from 'n'");
  }
  Poset p = Poset::from_permutation(*witness);
  if (j.contains("relation")) {
    const Poset given = Poset::from_relation(n, pairs);
    if (!(given == p)) {
      throw InvalidArgument("relation is inconsistent with the witness");
    }
  }
  return p;
}

Input parse_input(const std::string& text) {
  const auto first = text.find_first_not_of(" \t\r\n");
  if (first == std::string::npos) {
    throw InvalidArgument("empty input");
  }
  if (text[first] != '{' && text[first] != '[') {
    return parse_permutation_text(text);
  }
  Json j;
  try {
    j = Json::parse(text);
  } catch (const nlohmann::json::parse_error& e) {
    throw InvalidArgument(std::string("malformed JSON: ") + e.what());
  }
  if (j.is_object() && (j.contains("relation") || j.contains("witness"))) {
    return poset_from_json(j);
  }
  return permutation_from_json(j);
}

Json to_json(const Permutation& p) {
  return Json{{"n", p.size()}, {"values", p.one_based()}};
}

Json to_json(const Poset& p) {
  Json out{{"n", p.size()}};
  Json rel = Json::array();
  for (const auto& [a, b] : p.covers()) {
    rel.push_back({a + 1, b + 1});
  }
  out["relation"] = std::move(rel);
  if (p.witness()) {
    out["witness"] = p.witness()->one_based();
  }
  bool identity = true;
  for (int i = 0; i < p.size(); ++i) {
    identity = identity && p.labels()[i] == i;
  }
  if (!identity) {
    out["labels"] = one_based(p.labels());
  }
  return out;
}

Json to_json(const ParamSplit& split) {
  return Json{{"k", split.k}, {"n", split.n}, {"ell", split.ell},
              {"q", split.q}, {"r", split.r}, {"subcritical", split.subcritical}};
}

Json to_json(const CountReport& report) {
  return Json{{"k", report.k},
              {"increasing", count(report.increasing)},
              {"decreasing", count(report.decreasing)},
              {"total", count(report.total)}};
}

Json to_json(const LengthProfile& profile) {
  Json rows = Json::array();
  for (const auto& row : profile.per_length) {
    rows.push_back(Json{{"length", row.length},
                        {"increasing", count(row.increasing)},
                        {"decreasing", count(row.decreasing)}});
  }
  return Json{{"per_length", std::move(rows)}};
}

Json to_json(const Decomposition& dec) {
  Json hasse = Json::array();
  for (const auto& edges : dec.hasse) {
    Json level = Json::array();
    for (const auto& [x, y] : edges) {
      level.push_back({x + 1, y + 1});
    }
    hasse.push_back(std::move(level));
  }
  return Json{{"height", dec.height},
              {"levels", one_based_lists(dec.levels)},
              {"hasse", std::move(hasse)},
              {"u", counts(dec.u)},
              {"sigma", counts(dec.sigma)},
              {"maximum_chains", count(dec.height > 0 ? dec.maximum_chain_count() : BigCount(0))},
              {"a_prime", one_based_lists(dec.a_prime)},
              {"a_double_prime", one_based_lists(dec.a_double_prime)},
              {"b", one_based_lists(dec.b)},
              {"b_all", one_based_lists(dec.b_all)},
              {"c", one_based_lists(dec.c)},
              {"d", one_based_lists(dec.d)}};
}

Json to_json(const IndexSets& sets) {
  Json out{{"k", sets.k},
           {"F", sets.f},
           {"F_prime", sets.f_prime},
           {"F_double_prime", sets.f_double_prime},
           {"surplus", sets.surplus}};
  if (sets.threshold) {
    out["S"] = rational(*sets.threshold);
    out["ell"] = sets.ell;
    out["q"] = sets.q;
  } else {
    out["S"] = nullptr;
  }
  return out;
}

Json to_json(const PruneResult& result) {
  Json trace = Json::array();
  for (const auto& r : result.trace) {
    trace.push_back(Json{{"round", r.round},
                         {"removed", one_based(r.removed)},
                         {"dualized", r.dualized},
                         {"size", r.size_after},
                         {"height", r.height_after},
                         {"width", r.width_after},
                         {"surplus", r.surplus_after}});
  }
  return Json{{"result", to_json(result.result)}, {"trace", std::move(trace)}};
}

Json to_json(const ChainCover& cover) {
  return Json{{"chains", one_based_lists(cover.chains)},
              {"d", cover.deficiency},
              {"preconditions_hold", cover.preconditions_hold},
              {"sigma_i", count(cover.sigma_low)},
              {"sigma_j", count(cover.sigma_high)},
              {"sigma_bound_holds", cover.sigma_bound_holds}};
}

Json to_json(const ExampleReport& report) {
  Json clauses = Json::array();
  for (const auto& c : report.clauses) {
    clauses.push_back(Json{{"name", c.name}, {"passed", c.passed}, {"detail", c.detail}});
  }
  Json out{{"k", report.k}, {"passed", report.passed()}};
  out["case"] = report.case_label.empty() ? Json(nullptr) : Json(report.case_label);
  out["failed_clause"] =
      report.failed_clause.empty() ? Json(nullptr) : Json(report.failed_clause);
  out["chains"] = count(report.chain_count);
  out["antichains"] = count(report.antichain_count);
  out["clauses"] = std::move(clauses);
  return out;
}

Json to_json(const SetFamily& family) {
  return Json{{"ground_size", family.ground_size()},
              {"set_size", family.set_size()},
              {"size", family.size()},
              {"members", one_based_lists(family.to_lists())}};
}

Json to_json(const SignatureBoundReport& report) {
  Json out{{"preconditions_hold", report.preconditions_hold}};
  if (!report.precondition_detail.empty()) {
    out["precondition_detail"] = report.precondition_detail;
  }
  out["maximum_chains"] = count(report.maximum_chains);
  if (report.preconditions_hold) {
    out["chain_count"] = count(report.chain_count);
    out["bound"] = rational(report.bound_upper);
    out["satisfied"] = report.satisfied;
  }
  return out;
}

Json to_json(const SurplusBoundReport& report) {
  Json out{{"preconditions_hold", report.preconditions_hold}};
  if (!report.precondition_detail.empty()) {
    out["precondition_detail"] = report.precondition_detail;
  }
  out["height"] = report.height;
  out["width"] = report.width;
  out["surplus"] = report.surplus;
  out["homogenous"] = count(report.homogenous);
  if (report.threshold > 0) {
    out["threshold"] = count(report.threshold);
  }
  if (report.preconditions_hold) {
    out["satisfied"] = report.satisfied;
  }
  return out;
}

Json to_json(const LargeSurplusReport& report) {
  Json out{{"preconditions_hold", report.preconditions_hold}};
  if (!report.precondition_detail.empty()) {
    out["precondition_detail"] = report.precondition_detail;
  }
  out["min_cut"] = report.min_cut;
  if (report.preconditions_hold) {
    out["antichains"] = count(report.antichains);
    out["maximum_chains"] = count(report.maximum_chains);
    out["antichain_target"] = count(report.antichain_target);
    out["chain_target"] = count(report.chain_target);
    out["satisfied"] = report.satisfied;
  }
  return out;
}

Json to_json(const SearchResult& result) {
  Json witnesses = Json::array();
  for (const auto& w : result.witnesses) {
    witnesses.push_back(Json{{"values", w.permutation.one_based()},
                             {"increasing", count(w.increasing)},
                             {"decreasing", count(w.decreasing)},
                             {"orbit_size", w.orbit_size},
                             {"type", to_string(classify_counts(w.increasing, w.decreasing))}});
  }
  Json breakdown = Json::array();
  for (const auto& [key, tally] : result.type_breakdown) {
    breakdown.push_back(Json{{"increasing", key.first},
                             {"decreasing", key.second},
                             {"classes", tally.classes},
                             {"permutations", tally.permutations}});
  }
  return Json{{"n", result.n},
              {"k", result.k},
              {"minimum", count(result.minimum)},
              {"upper_bound_only", result.upper_bound_only},
              {"minimizer_classes", result.minimizer_classes},
              {"minimizer_permutations", result.minimizer_permutations},
              {"type_breakdown", std::move(breakdown)},
              {"witnesses", std::move(witnesses)},
              {"states_visited", result.states_visited},
              {"elapsed_seconds", result.elapsed_seconds}};
}

Json to_json(const TheoremReport& report) {
  return Json{{"search", to_json(report.search)},
              {"formula", count(report.formula)},
              {"matches_formula", report.matches_formula},
              {"subcritical", report.subcritical},
              {"critical", report.critical},
              {"mixed_classes", report.mixed_classes},
              {"mixed_permutations", report.mixed_permutations},
              {"single_type_holds", report.single_type_holds},
              {"majority_holds", report.majority_holds},
              {"passed", report.passed()}};
}

Json to_json(const PosetSearchResult& result) {
  Json rel = Json::array();
  for (const auto& [a, b] : result.witness_covers) {
    rel.push_back({a + 1, b + 1});
  }
  return Json{{"n", result.n},
              {"k", result.k},
              {"minimum", count(result.minimum)},
              {"witness", Json{{"n", result.n}, {"relation", std::move(rel)}}},
              {"posets_visited", result.posets_visited},
              {"elapsed_seconds", result.elapsed_seconds}};
}

SetFamily set_family_from_json(const Json& j) {
  if (!j.is_object() || !j.contains("members")) {
    throw InvalidArgument("set family JSON needs 'ground_size' and 'members'");
  }
  const int ground = require_int(j, "ground_size");
  std::vector<std::vector<int>> members;
  for (const auto& m : j.at("members")) {
    auto list = int_array(m, "member");
    for (int& e : list) {
      --e;
    }
    members.push_back(std::move(list));
  }
  return SetFamily::from_lists(ground, members);
}

FunctionTable function_table_from_json(const Json& j) {
  if (!j.is_object() || !j.contains("rows") || !j.at("rows").is_array()) {
    throw InvalidArgument("function table JSON needs a 'rows' array");
  }
  FunctionTable table;
  for (const auto& row : j.at("rows")) {
    table.rows.push_back(int_array(row, "row"));
  }
  table.domain_size = j.contains("domain_size")
                          ? require_int(j, "domain_size")
                          : (table.rows.empty() ? 0 : static_cast<int>(table.rows[0].size()));
  return table;
}

LabeledTree tree_from_json(const Json& j) {
  if (!j.is_object()) {
    throw InvalidArgument("tree JSON must be an object");
  }
  const int t = require_int(j, "t");
  std::vector<std::pair<int, int>> edges;
  if (j.contains("edges")) {
    for (const auto& e : j.at("edges")) {
      const auto ab = int_array(e, "edge");
      if (ab.size() != 2) {
        throw InvalidArgument("edges must be [u, v] pairs");
      }
      edges.emplace_back(ab[0] - 1, ab[1] - 1);
    }
  }
  return LabeledTree(t, std::move(edges));
}

} // namespace monoseq::json_io
