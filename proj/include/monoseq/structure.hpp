// SPDX-FileCopyrightText: (c) 2026 The monoseq authors
//
// SPDX-License-Identifier: Apache-2.0

#pragma once

#include <string>
#include <vector>

#include "monoseq/bigcount.hpp"
#include "monoseq/decomposition.hpp"
#include "monoseq/poset.hpp"

namespace monoseq {

/// Elements lying on some chain of maximum length.
std::vector<int> maximum_chain_elements(const Poset& p);

/// Minimum-cardinality set meeting every maximum chain (so its deletion
/// lowers the height), via vertex-split max-flow on the maximum-chain
/// elements. Among minimum sets the lexicographically least is returned.
std::vector<int> min_height_reducing_set(const Poset& p);

struct PruneRound {
  int round = 0;
  std::vector<int> removed;  // element labels
  bool dualized = false;
  int size_after = 0;
  int height_after = 0;
  int width_after = 0;
  long long surplus_after = 0;
};

struct PruneResult {
  Poset result;
  std::vector<PruneRound> trace;
};

/// Repeats: (1) delete a minimum height-reducing set if it has at most `t`
/// elements; (2) pass to the dual if height < width. Stops when a round
/// changes nothing or the poset is empty. Needs a witness.
PruneResult prune(const Poset& p, int k, int t);

struct ChainCover {
  std::vector<std::vector<int>> chains;  // bottom to top
  int deficiency = 0;                    // k - number of chains
  bool preconditions_hold = false;       // |A'_i| = ... = |A'_j| = k
  BigCount sigma_low;
  BigCount sigma_high;
  bool sigma_bound_holds = false;        // Sigma_i >= Sigma_j + d
};

/// Pairwise disjoint chains from A'_i to A'_j (1-based levels), grown top
/// down by a maximum matching between consecutive A' levels. When `strict`
/// the equal-size precondition is enforced (InvalidArgument naming the
/// offending level); otherwise it is only reported.
ChainCover disjoint_chain_cover(const Poset& p, int i, int j, int k,
                                bool strict = true);

struct ClauseResult {
  std::string name;
  bool passed = false;
  std::string detail;
};

struct ExampleReport {
  int k = 0;
  std::string case_label;   // "i", "ii", or empty on failure
  std::string failed_clause;  // first failure, empty when all pass
  std::vector<ClauseResult> clauses;
  BigCount chain_count;      // (k+1)-chains of P
  BigCount antichain_count;  // (k+1)-antichains of P
  bool passed() const { return failed_clause.empty(); }
};

/// Checks the structural description of the mixed extremal posets on
/// k^2 + k + 1 elements clause by clause.
ExampleReport verify_example_structure(const Poset& p, int k);

} // namespace monoseq
