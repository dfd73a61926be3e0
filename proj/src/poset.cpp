// SPDX-FileCopyrightText: (c) 2026 The monoseq authors
//
// SPDX-License-Identifier: Apache-2.0

#include "monoseq/poset.hpp"

#include <algorithm>
#include <bit>
#include <numeric>

#include "monoseq/counting.hpp"
#include "monoseq/error.hpp"
#include "monoseq/graph.hpp"

namespace monoseq {

int BitMatrix::row_count(int i) const {
  int count = 0;
  for (std::uint64_t word : row(i)) {
    count += std::popcount(word);
  }
  return count;
}

namespace {

template <class Fn>
void for_each_bit(std::span<const std::uint64_t> words, Fn&& fn) {
  for (std::size_t w = 0; w < words.size(); ++w) {
    std::uint64_t word = words[w];
    while (word != 0) {
      const int bit = std::countr_zero(word);
      fn(static_cast<int>(w * 64 + bit));
      word &= word - 1;
    }
  }
}

std::vector<int> identity_labels(int n) {
  std::vector<int> labels(n);
  std::iota(labels.begin(), labels.end(), 0);
  return labels;
}

} // namespace

Poset Poset::from_relation(int n, std::span<const std::pair<int, int>> less) {
  if (n < 0) {
    throw InvalidArgument("negative poset size");
  }
  Poset p;
  p.less_ = BitMatrix(n);
  p.labels_ = identity_labels(n);
  for (const auto& [a, b] : less) {
    if (a < 0 || a >= n || b < 0 || b >= n) {
      throw InvalidArgument("relation pair (" + std::to_string(a + 1) + "," +
                            std::to_string(b + 1) + ") out of range 1.." +
                            std::to_string(n));
    }
    if (a == b) {
      throw InvalidArgument("relation is not irreflexive at element " +
                            std::to_string(a + 1));
    }
    p.less_.set(a, b);
  }
  p.close_transitively();
  p.check_acyclic();
  return p;
}

Poset Poset::from_permutation(const Permutation& perm) {
  const int n = perm.size();
  Poset p;
  p.less_ = BitMatrix(n);
  p.labels_ = identity_labels(n);
  for (int i = 0; i < n; ++i) {
    for (int j = i + 1; j < n; ++j) {
      if (perm[i] < perm[j]) {
        p.less_.set(i, j);
      }
    }
  }
  p.witness_ = perm;
  return p;
}

Poset Poset::chain(int n) { return from_permutation(Permutation::identity(n)); }

Poset Poset::antichain(int n) {
  return from_permutation(Permutation::identity(n).complemented());
}

Poset Poset::disjoint_chains(std::span<const int> lengths) {
  // Chains stacked so that later chains take smaller values: a tau-like
  // witness with blocks of the requested lengths.
  int n = 0;
  for (int len : lengths) {
    if (len < 0) {
      throw InvalidArgument("negative chain length");
    }
    n += len;
  }
  std::vector<int> values;
  values.reserve(n);
  int top = n;
  for (int len : lengths) {
    top -= len;
    for (int i = 0; i < len; ++i) {
      values.push_back(top + i);
    }
  }
  return from_permutation(Permutation::from_zero_based(std::move(values)));
}

void Poset::close_transitively() {
  const int n = size();
  for (int mid = 0; mid < n; ++mid) {
    const auto via = less_.row(mid);
    std::vector<std::uint64_t> copy(via.begin(), via.end());
    for (int i = 0; i < n; ++i) {
      if (less_.test(i, mid)) {
        auto row = less_.row(i);
        for (std::size_t w = 0; w < row.size(); ++w) {
          row[w] |= copy[w];
        }
      }
    }
  }
}

void Poset::check_acyclic() const {
  for (int i = 0; i < size(); ++i) {
    if (less_.test(i, i)) {
      throw InvalidArgument("relation has a cycle through element " +
                            std::to_string(i + 1));
    }
  }
}

std::vector<std::pair<int, int>> Poset::covers() const {
  const int n = size();
  std::vector<std::pair<int, int>> out;
  std::vector<std::uint64_t> above(less_.words());
  for (int a = 0; a < n; ++a) {
    std::fill(above.begin(), above.end(), 0);
    for_each_bit(less_.row(a), [&](int c) {
      const auto row = less_.row(c);
      for (std::size_t w = 0; w < above.size(); ++w) {
        above[w] |= row[w];
      }
    });
    for_each_bit(less_.row(a), [&](int b) {
      if (!((above[b >> 6] >> (b & 63)) & 1u)) {
        out.emplace_back(a, b);
      }
    });
  }
  return out;
}

Poset Poset::induced(std::span<const int> elements) const {
  std::vector<int> keep(elements.begin(), elements.end());
  std::sort(keep.begin(), keep.end());
  keep.erase(std::unique(keep.begin(), keep.end()), keep.end());
  for (int e : keep) {
    if (e < 0 || e >= size()) {
      throw InvalidArgument("element " + std::to_string(e + 1) +
                            " not in poset");
    }
  }
  const int m = static_cast<int>(keep.size());
  Poset out;
  out.less_ = BitMatrix(m);
  out.labels_.resize(m);
  for (int i = 0; i < m; ++i) {
    out.labels_[i] = labels_[keep[i]];
    for (int j = 0; j < m; ++j) {
      if (less_.test(keep[i], keep[j])) {
        out.less_.set(i, j);
      }
    }
  }
  if (witness_) {
    std::vector<int> values(m);
    for (int i = 0; i < m; ++i) {
      values[i] = (*witness_)[keep[i]];
    }
    out.witness_ = Permutation::standardize(values);
  }
  return out;
}

Poset Poset::without(std::span<const int> elements) const {
  std::vector<char> drop(size(), 0);
  for (int e : elements) {
    if (e < 0 || e >= size()) {
      throw InvalidArgument("element " + std::to_string(e + 1) +
                            " not in poset");
    }
    drop[e] = 1;
  }
  std::vector<int> keep;
  for (int i = 0; i < size(); ++i) {
    if (!drop[i]) {
      keep.push_back(i);
    }
  }
  return induced(keep);
}

Poset Poset::reversed_order() const {
  const int n = size();
  Poset out;
  out.less_ = BitMatrix(n);
  out.labels_.resize(n);
  if (witness_) {
    // Keep element index == witness position: element a becomes n-1-a.
    for (int a = 0; a < n; ++a) {
      out.labels_[n - 1 - a] = labels_[a];
      for (int b = 0; b < n; ++b) {
        if (less_.test(b, a)) {
          out.less_.set(n - 1 - a, n - 1 - b);
        }
      }
    }
    out.witness_ = witness_->complemented().reversed();
  } else {
    out.labels_ = labels_;
    for (int a = 0; a < n; ++a) {
      for (int b = 0; b < n; ++b) {
        if (less_.test(b, a)) {
          out.less_.set(a, b);
        }
      }
    }
  }
  return out;
}

Poset dual(const Poset& p) {
  if (!p.witness()) {
    throw InvalidArgument(
        "dual poset needs an order-dimension-2 witness permutation");
  }
  return Poset::from_permutation(p.witness()->complemented())
      .with_labels(p.labels());
}

Poset Poset::with_labels(std::vector<int> labels) const {
  if (static_cast<int>(labels.size()) != size()) {
    throw InvalidArgument("label count does not match poset size");
  }
  Poset out = *this;
  out.labels_ = std::move(labels);
  return out;
}

std::vector<int> topological_order(const Poset& p) {
  const int n = p.size();
  std::vector<int> below(n, 0);
  for (int a = 0; a < n; ++a) {
    for_each_bit(p.relation().row(a), [&](int b) { ++below[b]; });
  }
  std::vector<int> order(n);
  std::iota(order.begin(), order.end(), 0);
  // Strictly more predecessors above in a transitively closed order.
  std::stable_sort(order.begin(), order.end(),
                   [&](int a, int b) { return below[a] < below[b]; });
  return order;
}

std::vector<int> chain_length_ending_at(const Poset& p) {
  const auto order = topological_order(p);
  std::vector<int> len(p.size(), 1);
  for (int a : order) {
    for_each_bit(p.relation().row(a),
                 [&](int b) { len[b] = std::max(len[b], len[a] + 1); });
  }
  return len;
}

std::vector<int> chain_length_starting_at(const Poset& p) {
  auto order = topological_order(p);
  std::reverse(order.begin(), order.end());
  std::vector<int> len(p.size(), 1);
  for (int a : order) {
    for_each_bit(p.relation().row(a),
                 [&](int b) { len[a] = std::max(len[a], len[b] + 1); });
  }
  return len;
}

int height(const Poset& p) {
  if (p.empty()) {
    return 0;
  }
  const auto len = chain_length_ending_at(p);
  return *std::max_element(len.begin(), len.end());
}

int width_by_matching(const Poset& p) {
  const int n = p.size();
  std::vector<std::vector<int>> adjacency(n);
  for (int a = 0; a < n; ++a) {
    for_each_bit(p.relation().row(a), [&](int b) { adjacency[a].push_back(b); });
  }
  return n - maximum_matching(adjacency, n).size;
}

int width(const Poset& p) {
  const int w = width_by_matching(p);
  if (p.witness()) {
    const int via_dual = p.empty() ? 0 : longest_decreasing_length(*p.witness());
    MONOSEQ_ENSURE(w == via_dual, "Dilworth width equals dual height");
  }
  return w;
}

BigCount count_chains_of_size(const Poset& p, int m) {
  if (m < 1) {
    throw InvalidArgument("chain size must be >= 1");
  }
  const int n = p.size();
  if (m > n) {
    return 0;
  }
  const auto order = topological_order(p);
  // ways[x][L-1] = chains with L elements whose maximum is x.
  std::vector<std::vector<BigCount>> ways(n, std::vector<BigCount>(m, 0));
  BigCount total = 0;
  for (int x : order) {
    ways[x][0] = 1;
  }
  for (int a : order) {
    for_each_bit(p.relation().row(a), [&](int b) {
      for (int L = 1; L < m; ++L) {
        if (ways[a][L - 1] != 0) {
          ways[b][L] += ways[a][L - 1];
        }
      }
    });
    total += ways[a][m - 1];
  }
  return total;
}

BigCount count_antichains_of_size(const Poset& p, int m, std::uint64_t budget) {
  if (m < 1) {
    throw InvalidArgument("antichain size must be >= 1");
  }
  if (p.witness()) {
    return count_chains_of_size(dual(p), m);
  }
  const int n = p.size();
  if (m > n) {
    return 0;
  }
  // comparable[i] as a bit matrix: row(i) | column(i).
  BitMatrix comparable(n);
  for (int a = 0; a < n; ++a) {
    for_each_bit(p.relation().row(a), [&](int b) {
      comparable.set(a, b);
      comparable.set(b, a);
    });
  }
  BigCount total = 0;
  std::uint64_t nodes = 0;
  std::vector<int> chosen;
  // Depth-first over increasing indices; `last` is the most recent pick.
  auto recurse = [&](auto&& self, int start) -> void {
    if (++nodes > budget) {
      throw BudgetExceeded("antichain enumeration exceeded budget of " +
                           std::to_string(budget) + " nodes");
    }
    if (static_cast<int>(chosen.size()) == m) {
      ++total;
      return;
    }
    const int need = m - static_cast<int>(chosen.size());
    for (int x = start; x <= n - need; ++x) {
      bool free = true;
      for (int c : chosen) {
        if (comparable.test(c, x)) {
          free = false;
          break;
        }
      }
      if (free) {
        chosen.push_back(x);
        self(self, x + 1);
        chosen.pop_back();
      }
    }
  };
  recurse(recurse, 0);
  return total;
}

BigCount h_k(const Poset& p, int k, std::uint64_t budget) {
  if (k < 1) {
    throw InvalidArgument("k must be >= 1");
  }
  return count_chains_of_size(p, k + 1) +
         count_antichains_of_size(p, k + 1, budget);
}

long long surplus(const Poset& p, int k) {
  const int h = height(p);
  const long long direct = static_cast<long long>(p.size()) -
                           static_cast<long long>(h) * k;
  std::vector<long long> level_size(h, 0);
  for (int len : chain_length_ending_at(p)) {
    ++level_size[len - 1];
  }
  long long by_levels = 0;
  for (long long s : level_size) {
    by_levels += s - k;
  }
  MONOSEQ_ENSURE(direct == by_levels, "surplus equals sum of level excesses");
  return direct;
}

} // namespace monoseq
