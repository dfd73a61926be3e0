// SPDX-FileCopyrightText: (c) 2026 The monoseq authors
//
// SPDX-License-Identifier: Apache-2.0

#pragma once

#include <cstdint>
#include <optional>
#include <span>
#include <utility>
#include <vector>

#include "monoseq/bigcount.hpp"
#include "monoseq/permutation.hpp"

namespace monoseq {

/// Dense square bit matrix, one row of 64-bit words per element.
class BitMatrix {
 public:
  BitMatrix() = default;
  explicit BitMatrix(int n)
      : n_(n), words_((n + 63) / 64), bits_(static_cast<std::size_t>(n) * words_, 0) {}

  int size() const noexcept { return n_; }
  bool test(int i, int j) const {
    return (row(i)[j >> 6] >> (j & 63)) & 1u;
  }
  void set(int i, int j) { row(i)[j >> 6] |= std::uint64_t{1} << (j & 63); }
  std::span<const std::uint64_t> row(int i) const {
    return {bits_.data() + static_cast<std::size_t>(i) * words_, words_};
  }
  std::span<std::uint64_t> row(int i) {
    return {bits_.data() + static_cast<std::size_t>(i) * words_, words_};
  }
  int words() const noexcept { return static_cast<int>(words_); }
  int row_count(int i) const;

  bool operator==(const BitMatrix&) const = default;

 private:
  int n_ = 0;
  std::size_t words_ = 0;
  std::vector<std::uint64_t> bits_;
};

/// Finite strict partial order on {0, ..., n-1}, transitively closed at
/// construction. Each element carries a label (an id in whatever poset it
/// was cut from) so that derived posets can be traced back.
class Poset {
 public:
  Poset() = default;

  /// Strict relation from pairs (a, b) meaning a < b; closure is computed.
  /// Rejects cycles and self-loops.
  static Poset from_relation(int n, std::span<const std::pair<int, int>> less);
  /// i < j iff i < j as positions and p(i) < p(j); witness = p.
  static Poset from_permutation(const Permutation& p);
  static Poset chain(int n);
  static Poset antichain(int n);
  /// Pairwise incomparable chains with the given lengths.
  static Poset disjoint_chains(std::span<const int> lengths);

  int size() const noexcept { return less_.size(); }
  bool empty() const noexcept { return size() == 0; }
  bool less(int a, int b) const { return less_.test(a, b); }
  bool comparable(int a, int b) const { return less(a, b) || less(b, a); }
  const BitMatrix& relation() const noexcept { return less_; }
  const std::optional<Permutation>& witness() const noexcept { return witness_; }
  const std::vector<int>& labels() const noexcept { return labels_; }

  /// Covering pairs (Hasse edges).
  std::vector<std::pair<int, int>> covers() const;

  /// Subposet on the given elements (kept in increasing index order). The
  /// witness, if any, is restricted and standardized.
  Poset induced(std::span<const int> elements) const;
  Poset without(std::span<const int> elements) const;

  /// x < y in the result iff y < x here. Drops nothing; the witness becomes
  /// the reversed permutation relabeled.
  Poset reversed_order() const;

  Poset with_labels(std::vector<int> labels) const;

  bool operator==(const Poset& other) const { return less_ == other.less_; }

 private:
  void close_transitively();
  void check_acyclic() const;

  BitMatrix less_;
  std::optional<Permutation> witness_;
  std::vector<int> labels_;
};

/// P* with witness the complemented permutation. Requires a witness.
Poset dual(const Poset& p);

/// Elements in an order compatible with <.
std::vector<int> topological_order(const Poset& p);

/// Longest chain ending at / starting at each element (element counts).
std::vector<int> chain_length_ending_at(const Poset& p);
std::vector<int> chain_length_starting_at(const Poset& p);

int height(const Poset& p);
/// Dilworth via maximum bipartite matching; when a witness exists the dual
/// height is computed as well and both must agree.
int width(const Poset& p);
int width_by_matching(const Poset& p);

/// Number of m-element chains.
BigCount count_chains_of_size(const Poset& p, int m);

inline constexpr std::uint64_t kDefaultAntichainBudget = 50'000'000;

/// Number of m-element antichains. With a witness this is the chain count
/// of the dual; otherwise independent sets of the comparability graph are
/// enumerated and BudgetExceeded is raised once more than `budget` search
/// nodes would be needed.
BigCount count_antichains_of_size(const Poset& p, int m,
                                  std::uint64_t budget = kDefaultAntichainBudget);

/// Homogenous (k+1)-sets: chains plus antichains.
BigCount h_k(const Poset& p, int k,
             std::uint64_t budget = kDefaultAntichainBudget);

/// n - height * k, checked against the level-sum form.
long long surplus(const Poset& p, int k);

} // namespace monoseq
