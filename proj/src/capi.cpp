// SPDX-FileCopyrightText: (c) 2026 The monoseq authors
//
// SPDX-License-Identifier: Apache-2.0

#include "monoseq/monoseq.h"

#include <cstdlib>
#include <cstring>
#include <new>
#include <string>

#include "monoseq/counting.hpp"
#include "monoseq/decomposition.hpp"
#include "monoseq/error.hpp"
#include "monoseq/json_io.hpp"
#include "monoseq/lemmas.hpp"
#include "monoseq/perm_core.hpp"
#include "monoseq/search.hpp"
#include "monoseq/structure.hpp"

struct monoseq_perm {
  monoseq::Permutation value;
};

struct monoseq_poset {
  monoseq::Poset value;
};

namespace {

using monoseq::json_io::Json;

thread_local std::string last_error;
thread_local std::string last_partial;

monoseq_status fail(monoseq_status status, const std::string& message) {
  last_error = message;
  return status;
}

template <typename F>
monoseq_status guarded(F&& body) {
  last_partial.clear();
  try {
    body();
    last_error.clear();
    return MONOSEQ_OK;
  } catch (const monoseq::BudgetExceeded& e) {
    last_partial = e.partial();
    return fail(MONOSEQ_BUDGET, e.what());
  } catch (const monoseq::InvalidArgument& e) {
    return fail(MONOSEQ_INVALID, e.what());
  } catch (const monoseq::Error& e) {
    return fail(MONOSEQ_INTERNAL, e.what());
  } catch (const std::bad_alloc&) {
    return fail(MONOSEQ_INTERNAL, "out of memory");
  } catch (const std::exception& e) {
    return fail(MONOSEQ_INTERNAL, e.what());
  }
}

char* copy_string(const std::string& s) {
  char* out = static_cast<char*>(std::malloc(s.size() + 1));
  if (out == nullptr) {
    throw std::bad_alloc();
  }
  std::memcpy(out, s.c_str(), s.size() + 1);
  return out;
}

void emit(const Json& j, char** out) { *out = copy_string(j.dump()); }

void need(const void* ptr, const char* what) {
  if (ptr == nullptr) {
    throw monoseq::InvalidArgument(std::string(what) + " is null");
  }
}

Json parse_json(const char* text) {
  need(text, "input");
  try {
    return Json::parse(text);
  } catch (const nlohmann::json::parse_error& e) {
    throw monoseq::InvalidArgument(std::string("malformed JSON: ") + e.what());
  }
}

monoseq::SearchOptions convert(const monoseq_search_options* options) {
  monoseq::SearchOptions out;
  if (options != nullptr) {
    out.budget = options->budget;
    out.workers = options->workers;
    out.use_symmetry = options->use_symmetry != 0;
    out.witness_cap = options->witness_cap;
  }
  return out;
}

} // namespace

extern "C" {

const char* monoseq_version(void) { return "0.1.0"; }
const char* monoseq_last_error(void) { return last_error.c_str(); }
const char* monoseq_last_partial(void) { return last_partial.c_str(); }
void monoseq_string_free(char* s) { std::free(s); }

// ------------------------------------------------------------ permutations

monoseq_status monoseq_perm_create(const int* values, size_t n, monoseq_perm** out) {
  return guarded([&] {
    need(out, "out");
    if (n > 0) {
      need(values, "values");
    }
    auto p = monoseq::Permutation::from_one_based(std::vector<int>(values, values + n));
    *out = new monoseq_perm{std::move(p)};
  });
}

monoseq_status monoseq_perm_tau(int k, int n, monoseq_perm** out) {
  return guarded([&] {
    need(out, "out");
    *out = new monoseq_perm{monoseq::build_tau(k, n)};
  });
}

monoseq_status monoseq_perm_sigma(int k, int variant, monoseq_perm** out) {
  return guarded([&] {
    need(out, "out");
    *out = new monoseq_perm{monoseq::build_sigma_extremal(k, variant)};
  });
}

void monoseq_perm_free(monoseq_perm* p) { delete p; }

size_t monoseq_perm_size(const monoseq_perm* p) {
  return p == nullptr ? 0 : p->value.size();
}

monoseq_status monoseq_perm_values(const monoseq_perm* p, int* out, size_t capacity) {
  return guarded([&] {
    need(p, "permutation");
    if (capacity < p->value.size()) {
      throw monoseq::InvalidArgument("buffer holds " + std::to_string(capacity) +
                                     " values, need " + std::to_string(p->value.size()));
    }
    need(out, "out");
    const auto values = p->value.one_based();
    std::copy(values.begin(), values.end(), out);
  });
}

monoseq_status monoseq_perm_to_text(const monoseq_perm* p, char** out) {
  return guarded([&] {
    need(p, "permutation");
    need(out, "out");
    *out = copy_string(p->value.to_text());
  });
}

monoseq_status monoseq_perm_to_json(const monoseq_perm* p, char** out) {
  return guarded([&] {
    need(p, "permutation");
    need(out, "out");
    emit(monoseq::json_io::to_json(p->value), out);
  });
}

monoseq_status monoseq_perm_symmetries_json(const monoseq_perm* p, char** out) {
  return guarded([&] {
    need(p, "permutation");
    need(out, "out");
    Json orbit = Json::array();
    for (const auto& q : monoseq::symmetries(p->value)) {
      orbit.push_back(q.one_based());
    }
    emit(Json{{"orbit_size", orbit.size()}, {"orbit", std::move(orbit)}}, out);
  });
}

monoseq_status monoseq_perm_canonical(const monoseq_perm* p, monoseq_perm** out) {
  return guarded([&] {
    need(p, "permutation");
    need(out, "out");
    *out = new monoseq_perm{monoseq::canonical_representative(p->value)};
  });
}

monoseq_status monoseq_parse_input(const char* text, monoseq_perm** perm,
                                   monoseq_poset** poset) {
  return guarded([&] {
    need(text, "input");
    need(perm, "perm");
    need(poset, "poset");
    auto parsed = monoseq::json_io::parse_input(text);
    if (auto* p = std::get_if<monoseq::Permutation>(&parsed)) {
      *perm = new monoseq_perm{std::move(*p)};
      *poset = nullptr;
    } else {
      *poset = new monoseq_poset{std::move(std::get<monoseq::Poset>(parsed))};
      *perm = nullptr;
    }
  });
}

// ---------------------------------------------------------------- counting

monoseq_status monoseq_count_json(const monoseq_perm* p, int k, char** out) {
  return guarded([&] {
    need(p, "permutation");
    need(out, "out");
    if (k < 1) {
      throw monoseq::InvalidArgument("k must be >= 1");
    }
    emit(monoseq::json_io::to_json(monoseq::count_monotone(p->value, k)), out);
  });
}

monoseq_status monoseq_count_oracle_json(const monoseq_perm* p, int k, uint64_t budget,
                                         char** out) {
  return guarded([&] {
    need(p, "permutation");
    need(out, "out");
    emit(monoseq::json_io::to_json(monoseq::brute_force_count(p->value, k, budget)), out);
  });
}

monoseq_status monoseq_profile_json(const monoseq_perm* p, int max_length, char** out) {
  return guarded([&] {
    need(p, "permutation");
    need(out, "out");
    emit(monoseq::json_io::to_json(monoseq::length_profile(p->value, max_length)), out);
  });
}

monoseq_status monoseq_classify(const monoseq_perm* p, int k, char** out) {
  return guarded([&] {
    need(p, "permutation");
    need(out, "out");
    *out = copy_string(monoseq::to_string(monoseq::classify_extremal(p->value, k)));
  });
}

monoseq_status monoseq_formula_json(int k, int n, char** out) {
  return guarded([&] {
    need(out, "out");
    if (k < 1 || n < 1) {
      throw monoseq::InvalidArgument("k and n must be >= 1");
    }
    const auto split = monoseq::param_split(k, n);
    const auto value = monoseq::m_tau_formula(k, n);
    Json j{{"k", k}, {"n", n}, {"m_tau", monoseq::json_io::count(value)},
           {"ell", split.ell}, {"q", split.q}, {"r", split.r},
           {"subcritical", split.subcritical}};
    j["delta"] = n > k * k ? monoseq::json_io::count(monoseq::delta_formula(k, n))
                           : Json(nullptr);
    j["mu"] = n >= k + 1 ? monoseq::json_io::rational(monoseq::mu(k, n, value))
                         : Json(nullptr);
    emit(j, out);
  });
}

monoseq_status monoseq_mu_json(int k, int n, const char* m, char** out) {
  return guarded([&] {
    need(m, "m");
    need(out, "out");
    monoseq::BigCount value;
    try {
      value = monoseq::BigCount(std::string(m));
    } catch (const std::exception&) {
      throw monoseq::InvalidArgument(std::string("not an integer: '") + m + "'");
    }
    if (value < 0) {
      throw monoseq::InvalidArgument("m must be nonnegative");
    }
    emit(monoseq::json_io::rational(monoseq::mu(k, n, value)), out);
  });
}

// ------------------------------------------------------------------ posets

monoseq_status monoseq_poset_parse(const char* json, monoseq_poset** out) {
  return guarded([&] {
    need(out, "out");
    *out = new monoseq_poset{monoseq::json_io::poset_from_json(parse_json(json))};
  });
}

monoseq_status monoseq_poset_from_perm(const monoseq_perm* p, monoseq_poset** out) {
  return guarded([&] {
    need(p, "permutation");
    need(out, "out");
    *out = new monoseq_poset{monoseq::Poset::from_permutation(p->value)};
  });
}

void monoseq_poset_free(monoseq_poset* p) { delete p; }

size_t monoseq_poset_size(const monoseq_poset* p) {
  return p == nullptr ? 0 : static_cast<size_t>(p->value.size());
}

monoseq_status monoseq_poset_to_json(const monoseq_poset* p, char** out) {
  return guarded([&] {
    need(p, "poset");
    need(out, "out");
    emit(monoseq::json_io::to_json(p->value), out);
  });
}

monoseq_status monoseq_poset_dual(const monoseq_poset* p, monoseq_poset** out) {
  return guarded([&] {
    need(p, "poset");
    need(out, "out");
    *out = new monoseq_poset{monoseq::dual(p->value)};
  });
}

monoseq_status monoseq_poset_reverse(const monoseq_poset* p, monoseq_poset** out) {
  return guarded([&] {
    need(p, "poset");
    need(out, "out");
    *out = new monoseq_poset{p->value.reversed_order()};
  });
}

monoseq_status monoseq_poset_summary_json(const monoseq_poset* p, int k, char** out) {
  return guarded([&] {
    need(p, "poset");
    need(out, "out");
    const auto& P = p->value;
    Json j{{"n", P.size()},
           {"height", monoseq::height(P)},
           {"width", P.empty() ? 0 : monoseq::width(P)},
           {"has_witness", P.witness().has_value()}};
    if (k >= 1) {
      j["k"] = k;
      j["surplus"] = monoseq::surplus(P, k);
    }
    emit(j, out);
  });
}

monoseq_status monoseq_poset_decompose_json(const monoseq_poset* p, char** out) {
  return guarded([&] {
    need(p, "poset");
    need(out, "out");
    emit(monoseq::json_io::to_json(monoseq::decompose(p->value)), out);
  });
}

monoseq_status monoseq_poset_index_sets_json(const monoseq_poset* p, int k, char** out) {
  return guarded([&] {
    need(p, "poset");
    need(out, "out");
    if (k < 1) {
      throw monoseq::InvalidArgument("k must be >= 1");
    }
    emit(monoseq::json_io::to_json(monoseq::index_sets(p->value, k)), out);
  });
}

monoseq_status monoseq_poset_hk_json(const monoseq_poset* p, int k, uint64_t budget,
                                     char** out) {
  return guarded([&] {
    need(p, "poset");
    need(out, "out");
    if (k < 1) {
      throw monoseq::InvalidArgument("k must be >= 1");
    }
    const auto chains = monoseq::count_chains_of_size(p->value, k + 1);
    const auto antichains = monoseq::count_antichains_of_size(p->value, k + 1, budget);
    emit(Json{{"k", k},
              {"chains", monoseq::json_io::count(chains)},
              {"antichains", monoseq::json_io::count(antichains)},
              {"total", monoseq::json_io::count(chains + antichains)}},
         out);
  });
}

monoseq_status monoseq_poset_cut_json(const monoseq_poset* p, char** out) {
  return guarded([&] {
    need(p, "poset");
    need(out, "out");
    const auto cut = monoseq::min_height_reducing_set(p->value);
    Json elements = Json::array();
    for (int e : cut) {
      elements.push_back(e + 1);
    }
    emit(Json{{"size", cut.size()}, {"elements", std::move(elements)}}, out);
  });
}

monoseq_status monoseq_poset_prune_json(const monoseq_poset* p, int k, int t, char** out) {
  return guarded([&] {
    need(p, "poset");
    need(out, "out");
    emit(monoseq::json_io::to_json(monoseq::prune(p->value, k, t)), out);
  });
}

monoseq_status monoseq_poset_chain_cover_json(const monoseq_poset* p, int i, int j,
                                              int k, int strict, char** out) {
  return guarded([&] {
    need(p, "poset");
    need(out, "out");
    emit(monoseq::json_io::to_json(
             monoseq::disjoint_chain_cover(p->value, i, j, k, strict != 0)),
         out);
  });
}

monoseq_status monoseq_poset_verify_example_json(const monoseq_poset* p, int k,
                                                 char** out) {
  return guarded([&] {
    need(p, "poset");
    need(out, "out");
    emit(monoseq::json_io::to_json(monoseq::verify_example_structure(p->value, k)), out);
  });
}

// ------------------------------------------------------------------ lemmas

monoseq_status monoseq_lemma_shadow_json(const char* family, int b, char** out) {
  return guarded([&] {
    need(out, "out");
    const auto f = monoseq::json_io::set_family_from_json(parse_json(family));
    const auto shadow = monoseq::lower_shadow(f, b);
    emit(Json{{"family_size", f.size()},
              {"b", b},
              {"shadow", monoseq::json_io::to_json(shadow)},
              {"bound_holds", monoseq::shadow_bound_holds(f.size(), shadow.size(), b)}},
         out);
  });
}

monoseq_status monoseq_lemma_signatures_json(const char* table, char** out) {
  return guarded([&] {
    need(out, "out");
    const auto t = monoseq::json_io::function_table_from_json(parse_json(table));
    const auto sets = monoseq::distinguishing_sets(t);
    Json list = Json::array();
    for (const auto& s : sets) {
      Json one = Json::array();
      for (int x : s) {
        one.push_back(x + 1);
      }
      list.push_back(std::move(one));
    }
    emit(Json{{"M", t.rows.size()},
              {"sets", std::move(list)},
              {"valid", monoseq::distinguishing_sets_valid(t, sets)}},
         out);
  });
}

monoseq_status monoseq_lemma_connected_json(const char* tree, int c, char** out) {
  return guarded([&] {
    need(out, "out");
    const auto t = monoseq::json_io::tree_from_json(parse_json(tree));
    const auto count = monoseq::count_connected_subsets(t, c);
    emit(Json{{"t", t.size()},
              {"c", c},
              {"count", monoseq::json_io::count(count)},
              {"lower_bound", t.size() - c + 1}},
         out);
  });
}

monoseq_status monoseq_lemma_signature_bound_json(const monoseq_poset* p, int k, int ell,
                                                  int anchor, char** out) {
  return guarded([&] {
    need(p, "poset");
    need(out, "out");
    std::optional<int> a;
    if (anchor != 0) {
      a = anchor - 1;
    }
    emit(monoseq::json_io::to_json(monoseq::signature_bound_check(p->value, k, ell, a)),
         out);
  });
}

monoseq_status monoseq_lemma_surplus_bound_json(const monoseq_poset* p, int k, int t,
                                                char** out) {
  return guarded([&] {
    need(p, "poset");
    need(out, "out");
    emit(monoseq::json_io::to_json(monoseq::surplus_conclusion_check(p->value, k, t)),
         out);
  });
}

monoseq_status monoseq_lemma_large_surplus_json(const monoseq_poset* p, int k, int d,
                                                int s, char** out) {
  return guarded([&] {
    need(p, "poset");
    need(out, "out");
    emit(monoseq::json_io::to_json(monoseq::large_surplus_check(p->value, k, d, s)), out);
  });
}

// ------------------------------------------------------------------ search

void monoseq_search_options_init(monoseq_search_options* options) {
  if (options == nullptr) {
    return;
  }
  const monoseq::SearchOptions defaults;
  options->budget = defaults.budget;
  options->workers = defaults.workers;
  options->use_symmetry = defaults.use_symmetry ? 1 : 0;
  options->witness_cap = defaults.witness_cap;
}

monoseq_status monoseq_search_exhaustive_json(int n, int k,
                                              const monoseq_search_options* options,
                                              char** out) {
  return guarded([&] {
    need(out, "out");
    emit(monoseq::json_io::to_json(monoseq::exhaustive_min(n, k, convert(options))), out);
  });
}

monoseq_status monoseq_verify_theorem_json(int n, int k,
                                           const monoseq_search_options* options,
                                           char** out) {
  return guarded([&] {
    need(out, "out");
    emit(monoseq::json_io::to_json(monoseq::verify_theorem(n, k, convert(options))), out);
  });
}

monoseq_status monoseq_search_heuristic_json(int n, int k, int trials, uint64_t seed,
                                             char** out) {
  return guarded([&] {
    need(out, "out");
    emit(monoseq::json_io::to_json(monoseq::heuristic_min(n, k, trials, seed)), out);
  });
}

monoseq_status monoseq_search_posets_json(int n, int k, char** out) {
  return guarded([&] {
    need(out, "out");
    emit(monoseq::json_io::to_json(monoseq::min_hk_over_posets(n, k)), out);
  });
}

} // extern "C"
