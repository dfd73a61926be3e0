// SPDX-FileCopyrightText: (c) 2026 The monoseq authors
//
// SPDX-License-Identifier: Apache-2.0

#pragma once

#include <optional>
#include <utility>
#include <vector>

#include "monoseq/bigcount.hpp"
#include "monoseq/poset.hpp"

namespace monoseq {

/// Canonical (Mirsky) antichain decomposition and the statistics built on it.
///
/// Levels are 0-based here: levels[i] is the set of elements whose longest
/// chain from below has i+1 elements. Per-level vectors are all of length
/// `height`. Sets that are only defined for part of the range are left empty
/// outside it: `b`, `b_all` and `d` have nothing at level 0, and `c` has
/// nothing at the top level.
struct Decomposition {
  int height = 0;
  std::vector<std::vector<int>> levels;
  std::vector<int> level_of;

  /// hasse[i]: comparable pairs (x, y), x in levels[i], y in levels[i+1].
  /// Between consecutive levels every comparability is a cover.
  std::vector<std::vector<std::pair<int, int>>> hasse;

  /// u[x]: chains of (height - level) elements with minimum x that meet
  /// every level above x.
  std::vector<BigCount> u;
  std::vector<BigCount> sigma;

  std::vector<std::vector<int>> a_prime;         // u >= 1
  std::vector<std::vector<int>> a_double_prime;  // u >= 2
  std::vector<std::vector<int>> b;      // y in A'_i with exactly one lower neighbour
  std::vector<std::vector<int>> b_all;  // same over all of A_i
  std::vector<std::vector<int>> c;      // x in A'_i with <= 1 upper neighbour in A'_{i+1}
  std::vector<std::vector<int>> d;      // y in A'_i with exactly two lower neighbours

  std::vector<int> down_degree;  // G-neighbours in the level below
  std::vector<int> up_degree;    // G-neighbours in the level above

  /// Number of chains of maximum length.
  const BigCount& maximum_chain_count() const { return sigma.front(); }
};

Decomposition decompose(const Poset& p);

/// Level-index diagnostics. Indices are 1-based like the levels they name.
struct IndexSets {
  int k = 0;
  std::vector<int> f;               // |A_i| >= k+1
  std::vector<int> f_prime;         // |A_i| - |A'_i| + |A'_{i+1}| >= k+1
  std::vector<int> f_double_prime;  // i < max F': |A''_{i+1}| - |A''_i| + |A_i| >= k+1
  long long surplus = 0;
  /// (1 + q/ell) k + 50 sqrt(k) log2 k, rounded outward to a rational; only
  /// when n > k(k+1) so that ell >= 1.
  std::optional<Rational> threshold;
  std::optional<double> threshold_approx;
  int ell = 0;
  int q = 0;
};

IndexSets index_sets(const Poset& p, const Decomposition& dec, int k);
IndexSets index_sets(const Poset& p, int k);

} // namespace monoseq
