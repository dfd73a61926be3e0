// SPDX-FileCopyrightText: (c) 2026 The monoseq authors
//
// SPDX-License-Identifier: Apache-2.0

#ifndef MONOSEQ_MONOSEQ_H
#define MONOSEQ_MONOSEQ_H

#include <stddef.h>
#include <stdint.h>

#ifdef MONOSEQ_BUILDING_LIBRARY
#define MONOSEQ_API __attribute__((visibility("default")))
#else
#define MONOSEQ_API
#endif

#ifdef __cplusplus
extern "C" {
#endif

// Every call returns a status. On failure, monoseq_last_error() describes
// it (per thread) and out-parameters are left untouched.
typedef enum monoseq_status {
  MONOSEQ_OK = 0,
  MONOSEQ_INVALID = 2,
  MONOSEQ_BUDGET = 3,
  MONOSEQ_INTERNAL = 70
} monoseq_status;

typedef struct monoseq_perm monoseq_perm;
typedef struct monoseq_poset monoseq_poset;

typedef struct monoseq_search_options {
  uint64_t budget;  // DFS node cap
  int workers;
  int use_symmetry;
  size_t witness_cap;
} monoseq_search_options;

MONOSEQ_API const char* monoseq_version(void);
MONOSEQ_API const char* monoseq_last_error(void);
// JSON with whatever was known when a budget ran out; empty otherwise.
MONOSEQ_API const char* monoseq_last_partial(void);
// Frees strings returned through char** out-parameters.
MONOSEQ_API void monoseq_string_free(char* s);

// Permutations. Values are 1-based.
MONOSEQ_API monoseq_status monoseq_perm_create(const int* values, size_t n,
                                               monoseq_perm** out);
MONOSEQ_API monoseq_status monoseq_perm_tau(int k, int n, monoseq_perm** out);
MONOSEQ_API monoseq_status monoseq_perm_sigma(int k, int variant, monoseq_perm** out);
MONOSEQ_API void monoseq_perm_free(monoseq_perm* p);
MONOSEQ_API size_t monoseq_perm_size(const monoseq_perm* p);
MONOSEQ_API monoseq_status monoseq_perm_values(const monoseq_perm* p, int* out,
                                               size_t capacity);
MONOSEQ_API monoseq_status monoseq_perm_to_text(const monoseq_perm* p, char** out);
MONOSEQ_API monoseq_status monoseq_perm_to_json(const monoseq_perm* p, char** out);
MONOSEQ_API monoseq_status monoseq_perm_symmetries_json(const monoseq_perm* p,
                                                        char** out);
MONOSEQ_API monoseq_status monoseq_perm_canonical(const monoseq_perm* p,
                                                  monoseq_perm** out);

// Plain text, a JSON permutation or a JSON poset; exactly one of the two
// outputs is set.
MONOSEQ_API monoseq_status monoseq_parse_input(const char* text, monoseq_perm** perm,
                                               monoseq_poset** poset);

// Counting.
MONOSEQ_API monoseq_status monoseq_count_json(const monoseq_perm* p, int k,
                                              char** out);
MONOSEQ_API monoseq_status monoseq_count_oracle_json(const monoseq_perm* p, int k,
                                                     uint64_t budget, char** out);
MONOSEQ_API monoseq_status monoseq_profile_json(const monoseq_perm* p, int max_length,
                                                char** out);
MONOSEQ_API monoseq_status monoseq_classify(const monoseq_perm* p, int k, char** out);

// Closed forms: m_tau, the (ell, q, r) split, the increment when n > k^2
// and mu of the tau value when n >= k+1.
MONOSEQ_API monoseq_status monoseq_formula_json(int k, int n, char** out);
// m as a decimal string.
MONOSEQ_API monoseq_status monoseq_mu_json(int k, int n, const char* m, char** out);

// Posets. Elements are 1-based in JSON.
MONOSEQ_API monoseq_status monoseq_poset_parse(const char* json, monoseq_poset** out);
MONOSEQ_API monoseq_status monoseq_poset_from_perm(const monoseq_perm* p,
                                                   monoseq_poset** out);
MONOSEQ_API void monoseq_poset_free(monoseq_poset* p);
MONOSEQ_API size_t monoseq_poset_size(const monoseq_poset* p);
MONOSEQ_API monoseq_status monoseq_poset_to_json(const monoseq_poset* p, char** out);
MONOSEQ_API monoseq_status monoseq_poset_dual(const monoseq_poset* p,
                                              monoseq_poset** out);
MONOSEQ_API monoseq_status monoseq_poset_reverse(const monoseq_poset* p,
                                                 monoseq_poset** out);
MONOSEQ_API monoseq_status monoseq_poset_summary_json(const monoseq_poset* p, int k,
                                                      char** out);
MONOSEQ_API monoseq_status monoseq_poset_decompose_json(const monoseq_poset* p,
                                                        char** out);
MONOSEQ_API monoseq_status monoseq_poset_index_sets_json(const monoseq_poset* p, int k,
                                                         char** out);
MONOSEQ_API monoseq_status monoseq_poset_hk_json(const monoseq_poset* p, int k,
                                                 uint64_t budget, char** out);
MONOSEQ_API monoseq_status monoseq_poset_cut_json(const monoseq_poset* p, char** out);
MONOSEQ_API monoseq_status monoseq_poset_prune_json(const monoseq_poset* p, int k,
                                                    int t, char** out);
MONOSEQ_API monoseq_status monoseq_poset_chain_cover_json(const monoseq_poset* p,
                                                          int i, int j, int k,
                                                          int strict, char** out);
MONOSEQ_API monoseq_status monoseq_poset_verify_example_json(const monoseq_poset* p,
                                                             int k, char** out);

// Lemma checkers. Inputs are JSON documents.
MONOSEQ_API monoseq_status monoseq_lemma_shadow_json(const char* family, int b,
                                                     char** out);
MONOSEQ_API monoseq_status monoseq_lemma_signatures_json(const char* table, char** out);
MONOSEQ_API monoseq_status monoseq_lemma_connected_json(const char* tree, int c,
                                                        char** out);
// anchor is a 1-based element, or 0 for none.
MONOSEQ_API monoseq_status monoseq_lemma_signature_bound_json(const monoseq_poset* p,
                                                              int k, int ell,
                                                              int anchor, char** out);
MONOSEQ_API monoseq_status monoseq_lemma_surplus_bound_json(const monoseq_poset* p,
                                                            int k, int t, char** out);
MONOSEQ_API monoseq_status monoseq_lemma_large_surplus_json(const monoseq_poset* p,
                                                            int k, int d, int s,
                                                            char** out);

// Search.
MONOSEQ_API void monoseq_search_options_init(monoseq_search_options* options);
MONOSEQ_API monoseq_status monoseq_search_exhaustive_json(
    int n, int k, const monoseq_search_options* options, char** out);
MONOSEQ_API monoseq_status monoseq_verify_theorem_json(
    int n, int k, const monoseq_search_options* options, char** out);
MONOSEQ_API monoseq_status monoseq_search_heuristic_json(int n, int k, int trials,
                                                         uint64_t seed, char** out);
MONOSEQ_API monoseq_status monoseq_search_posets_json(int n, int k, char** out);

#ifdef __cplusplus
}
#endif

#endif // MONOSEQ_MONOSEQ_H
