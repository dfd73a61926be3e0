// SPDX-FileCopyrightText: (c) 2026 The monoseq authors
//
// SPDX-License-Identifier: Apache-2.0

#pragma once

#include <cstdint>
#include <map>
#include <utility>
#include <vector>

#include "monoseq/bigcount.hpp"
#include "monoseq/permutation.hpp"

namespace monoseq {

inline constexpr std::uint64_t kDefaultSearchBudget = 4'000'000'000ULL;
inline constexpr int kMaxExhaustiveN = 16;

struct SearchOptions {
  std::uint64_t budget = kDefaultSearchBudget;  // DFS nodes
  int workers = 1;
  /// Visit one representative per orbit of the order-8 symmetry group.
  bool use_symmetry = true;
  std::size_t witness_cap = 256;
};

struct Witness {
  Permutation permutation;
  BigCount increasing;
  BigCount decreasing;
  std::uint64_t orbit_size = 1;
};

/// Tally of minimizers by their (increasing, decreasing) pair.
struct TypeTally {
  std::uint64_t classes = 0;       // orbit representatives
  std::uint64_t permutations = 0;  // weighted by orbit size
};

struct SearchResult {
  int n = 0;
  int k = 0;
  BigCount minimum;
  /// Heuristic results are only upper bounds on the true minimum.
  bool upper_bound_only = false;
  std::vector<Witness> witnesses;  // capped, in enumeration order
  std::map<std::pair<std::uint64_t, std::uint64_t>, TypeTally> type_breakdown;
  std::uint64_t minimizer_classes = 0;
  std::uint64_t minimizer_permutations = 0;
  std::uint64_t states_visited = 0;
  double elapsed_seconds = 0.0;
};

/// Exact m_k(n) by depth-first search over prefixes. A prefix is cut as soon
/// as the monotone (k+1)-subsequences it already contains, plus the
/// n_rest - k^2 that any suffix must add, exceed the bound. The bound starts
/// at the tau value, so every minimizer is reached. Work is split by the
/// first two values; each task keeps its own bound so the node count and the
/// output do not depend on scheduling.
SearchResult exhaustive_min(int n, int k, const SearchOptions& options = {});

enum class TypeLabel { IncreasingOnly, DecreasingOnly, Mixed, None };

const char* to_string(TypeLabel label);

TypeLabel classify_extremal(const Permutation& p, int k);
TypeLabel classify_counts(const BigCount& increasing, const BigCount& decreasing);

struct TheoremReport {
  SearchResult search;
  BigCount formula;
  bool matches_formula = false;
  bool subcritical = false;  // n <= k^2
  bool critical = false;     // n == k^2 + k + 1
  std::uint64_t mixed_classes = 0;
  std::uint64_t mixed_permutations = 0;
  /// Off the critical size: no minimizer is mixed.
  bool single_type_holds = true;
  /// On the critical size: every minimizer has >= 2k-1 sets of one type.
  bool majority_holds = true;
  bool passed() const {
    return matches_formula && single_type_holds && majority_holds;
  }
};

TheoremReport verify_theorem(int n, int k, const SearchOptions& options = {});

/// Seeded random restarts plus hill-climbing over adjacent transpositions;
/// tau is always the first start. Sequential and fully determined by seed.
SearchResult heuristic_min(int n, int k, int trials, std::uint64_t seed);

struct PosetSearchResult {
  int n = 0;
  int k = 0;
  BigCount minimum;
  std::vector<std::pair<int, int>> witness_covers;  // 0-based
  std::uint64_t posets_visited = 0;
  double elapsed_seconds = 0.0;
};

inline constexpr int kMaxPosetSearchN = 7;

/// Exact h_k(n) over all posets, enumerated as naturally labeled orders
/// (each new element gets a down-closed set of predecessors).
PosetSearchResult min_hk_over_posets(int n, int k);

} // namespace monoseq
