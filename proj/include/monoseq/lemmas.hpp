// SPDX-FileCopyrightText: (c) 2026 The monoseq authors
//
// SPDX-License-Identifier: Apache-2.0

#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "monoseq/bigcount.hpp"
#include "monoseq/poset.hpp"

namespace monoseq {

/// Family of distinct `set_size`-element subsets of {0, ..., ground_size-1},
/// stored as bitmasks (ground_size <= 64).
class SetFamily {
 public:
  SetFamily(int ground_size, int set_size, std::vector<std::uint64_t> members);
  /// From explicit element lists (0-based); the set size is inferred.
  static SetFamily from_lists(int ground_size,
                              const std::vector<std::vector<int>>& members);

  int ground_size() const noexcept { return ground_size_; }
  int set_size() const noexcept { return set_size_; }
  const std::vector<std::uint64_t>& members() const noexcept { return members_; }
  std::size_t size() const noexcept { return members_.size(); }
  std::vector<std::vector<int>> to_lists() const;

 private:
  int ground_size_;
  int set_size_;
  std::vector<std::uint64_t> members_;  // sorted
};

/// All b-subsets of members (exact, by subset expansion). The result is
/// checked against |shadow| >= min(|F|/2, 2^b).
SetFamily lower_shadow(const SetFamily& family, int b);

/// True iff |shadow| >= min(|F|/2, 2^b).
bool shadow_bound_holds(std::size_t family_size, std::size_t shadow_size, int b);

/// Rows are functions on the columns 0..domain_size-1.
struct FunctionTable {
  int domain_size = 0;
  std::vector<std::vector<int>> rows;
};

/// Small column sets X_i, |X_i| <= log2 M, such that rows i and j already
/// differ on X_i u X_j. Splits on the least column where rows disagree and
/// takes the least majority value; both postconditions are checked.
std::vector<std::vector<int>> distinguishing_sets(const FunctionTable& table);

/// Checks both postconditions on a candidate answer.
bool distinguishing_sets_valid(const FunctionTable& table,
                               const std::vector<std::vector<int>>& sets);

class LabeledTree {
 public:
  /// 0-based edges; must form a spanning tree on t vertices.
  LabeledTree(int t, std::vector<std::pair<int, int>> edges);
  static LabeledTree path(int t);
  static LabeledTree star(int t);

  int size() const noexcept { return static_cast<int>(adjacency_.size()); }
  const std::vector<std::pair<int, int>>& edges() const noexcept { return edges_; }
  const std::vector<std::vector<int>>& adjacency() const noexcept { return adjacency_; }

 private:
  std::vector<std::pair<int, int>> edges_;
  std::vector<std::vector<int>> adjacency_;
};

/// Number of connected c-vertex subsets (rooted subtree DP); checked
/// against the lower bound t - c + 1.
BigCount count_connected_subsets(const LabeledTree& tree, int c);

/// Chains of the poset with m elements that contain `element`.
BigCount count_chains_through(const Poset& p, int element, int m);
/// Maximum chains through `element`.
BigCount count_maximum_chains_through(const Poset& p, int element);

struct SignatureBoundReport {
  bool preconditions_hold = false;
  std::string precondition_detail;
  BigCount maximum_chains;      // M
  BigCount chain_count;         // (k+1)-chains (through the anchor if given)
  Rational bound_upper;         // rational upper bound on the guaranteed count
  double bound_approx = 0.0;
  bool satisfied = false;       // chain_count >= bound_upper
};

/// Chain-count guarantee from the number M of maximum chains for a poset of
/// height k + ell with log2 M + 1 <= k/4. The exponential factor is
/// over-estimated with a truncated series so `satisfied` is never a
/// rounding artefact.
SignatureBoundReport signature_bound_check(const Poset& p, int k, int ell,
                                           std::optional<int> anchor = {});

struct SurplusBoundReport {
  bool preconditions_hold = false;
  std::string precondition_detail;
  int height = 0;
  int width = 0;
  long long surplus = 0;
  BigCount homogenous;  // h_k(P)
  BigCount threshold;   // ceil(2^(sqrt t - 1))
  bool satisfied = false;
};

/// Large-surplus conclusion: h >= w and s_k >= 3t with 0 < t <= k/2 should
/// force at least 2^(sqrt t - 1) homogenous (k+1)-sets (a large-k theorem;
/// small-k failures are reported, not raised).
SurplusBoundReport surplus_conclusion_check(const Poset& p, int k, int t);

struct LargeSurplusReport {
  bool preconditions_hold = false;
  std::string precondition_detail;
  std::size_t min_cut = 0;
  BigCount antichains;       // (k+1)-antichains
  BigCount maximum_chains;   // Sigma_1
  BigCount antichain_target; // 2^d
  BigCount chain_target;     // 2^floor(s / 2d)
  bool satisfied = false;
};

/// Preconditions 1 <= d <= k, s_k(P) >= s and no set of at most s/2
/// elements lowers the height; conclusion: >= 2^d antichains of size k+1 or
/// >= 2^floor(s/2d) maximum chains.
LargeSurplusReport large_surplus_check(const Poset& p, int k, int d, int s);

} // namespace monoseq
