// SPDX-FileCopyrightText: (c) 2026 The monoseq authors
//
// SPDX-License-Identifier: Apache-2.0

#pragma once

#include <cstdint>
#include <vector>

#include "monoseq/bigcount.hpp"
#include "monoseq/permutation.hpp"

namespace monoseq {

/// Monotone (k+1)-subsequence counts of one permutation.
struct CountReport {
  int k = 0;
  BigCount increasing;
  BigCount decreasing;
  BigCount total;

  bool operator==(const CountReport&) const = default;
};

struct LengthCounts {
  int length = 0;
  BigCount increasing;
  BigCount decreasing;
};

/// Counts for every length 2..max_length, ascending.
struct LengthProfile {
  std::vector<LengthCounts> per_length;
};

inline constexpr std::uint64_t kDefaultBruteForceBudget = 50'000'000;

/// Number of strictly increasing subsequences of the given length.
///
/// Layered recurrence f_L(i) = sum_{j<i, p(j)<p(i)} f_{L-1}(j), one
/// value-indexed Fenwick tree per layer. Runs in 128-bit arithmetic and
/// transparently redoes the pass with BigCount if any addition overflows.
BigCount count_increasing_exact(const Permutation& p, int length);

CountReport count_monotone(const Permutation& p, int k);

/// Enumerates every (k+1)-subset of positions. Throws BudgetExceeded when
/// C(n, k+1) > budget.
CountReport brute_force_count(const Permutation& p, int k,
                              std::uint64_t budget = kDefaultBruteForceBudget);

LengthProfile length_profile(const Permutation& p, int max_length);

/// Patience sorting; the height/width of the permutation's poset.
int longest_increasing_length(const Permutation& p);
int longest_decreasing_length(const Permutation& p);

} // namespace monoseq
