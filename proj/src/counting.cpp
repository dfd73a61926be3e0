// SPDX-FileCopyrightText: (c) 2026 The monoseq authors
//
// SPDX-License-Identifier: Apache-2.0

#include "monoseq/counting.hpp"

#include <algorithm>

#include "monoseq/error.hpp"

namespace monoseq {

namespace {

using u128 = unsigned __int128;

struct Overflow {};

inline void accumulate(u128& into, const u128& value) {
  if (__builtin_add_overflow(into, value, &into)) {
    throw Overflow{};
  }
}

inline void accumulate(BigCount& into, const BigCount& value) { into += value; }

template <class Count>
class Fenwick {
 public:
  explicit Fenwick(int n) : tree_(n + 1, Count(0)) {}

  void add(int index, const Count& value) {
    for (int i = index + 1; i < static_cast<int>(tree_.size()); i += i & -i) {
      accumulate(tree_[i], value);
    }
  }

  /// Sum over indices [0, count).
  Count prefix(int count) const {
    Count sum = 0;
    for (int i = count; i > 0; i -= i & -i) {
      accumulate(sum, tree_[i]);
    }
    return sum;
  }

 private:
  std::vector<Count> tree_;
};

// totals[L] for L = 0..max_length; totals[0] unused.
template <class Count>
std::vector<Count> layered_totals(const Permutation& p, int max_length) {
  const int n = p.size();
  std::vector<Count> totals(max_length + 1, Count(0));
  if (max_length < 1) {
    return totals;
  }
  totals[1] = Count(n);
  if (max_length == 1) {
    return totals;
  }
  // Layer L's tree stores f_L by value; the top layer is never queried.
  std::vector<Fenwick<Count>> layers;
  layers.reserve(max_length);
  for (int L = 0; L < max_length; ++L) {
    layers.emplace_back(n);
  }
  for (int i = 0; i < n; ++i) {
    const int v = p[i];
    for (int L = max_length; L >= 2; --L) {
      const Count f = layers[L - 1].prefix(v);
      if (f == 0) {
        continue;
      }
      accumulate(totals[L], f);
      if (L < max_length) {
        layers[L].add(v, f);
      }
    }
    layers[1].add(v, Count(1));
  }
  return totals;
}

BigCount to_big(u128 value) {
  BigCount out = static_cast<std::uint64_t>(value >> 64);
  out <<= 64;
  out += static_cast<std::uint64_t>(value);
  return out;
}

std::vector<BigCount> totals_exact(const Permutation& p, int max_length) {
  try {
    const auto fast = layered_totals<u128>(p, max_length);
    std::vector<BigCount> out;
    out.reserve(fast.size());
    for (const u128& value : fast) {
      out.push_back(to_big(value));
    }
    return out;
  } catch (const Overflow&) {
    return layered_totals<BigCount>(p, max_length);
  }
}

void require_k(int k) {
  if (k < 1) {
    throw InvalidArgument("k must be >= 1, got " + std::to_string(k));
  }
}

} // namespace

BigCount count_increasing_exact(const Permutation& p, int length) {
  if (length < 1) {
    throw InvalidArgument("subsequence length must be >= 1");
  }
  if (length > p.size()) {
    return 0;
  }
  return totals_exact(p, length)[length];
}

CountReport count_monotone(const Permutation& p, int k) {
  require_k(k);
  CountReport report;
  report.k = k;
  report.increasing = count_increasing_exact(p, k + 1);
  report.decreasing = count_increasing_exact(p.reversed(), k + 1);
  report.total = report.increasing + report.decreasing;
  return report;
}

CountReport brute_force_count(const Permutation& p, int k,
                              std::uint64_t budget) {
  require_k(k);
  const int n = p.size();
  const int m = k + 1;
  const BigCount subsets = binomial(n, m);
  if (subsets > budget) {
    throw BudgetExceeded("brute-force enumeration of C(" + std::to_string(n) +
                         "," + std::to_string(m) + ") = " + subsets.str() +
                         " subsets exceeds budget " + std::to_string(budget));
  }
  CountReport report;
  report.k = k;
  if (m > n) {
    return report;
  }
  std::uint64_t inc = 0;
  std::uint64_t dec = 0;
  std::vector<int> idx(m);
  for (int i = 0; i < m; ++i) {
    idx[i] = i;
  }
  while (true) {
    bool up = true;
    bool down = true;
    for (int i = 1; i < m && (up || down); ++i) {
      const int a = p[idx[i - 1]];
      const int b = p[idx[i]];
      up = up && a < b;
      down = down && a > b;
    }
    inc += up;
    dec += down;
    int pos = m - 1;
    while (pos >= 0 && idx[pos] == n - m + pos) {
      --pos;
    }
    if (pos < 0) {
      break;
    }
    ++idx[pos];
    for (int i = pos + 1; i < m; ++i) {
      idx[i] = idx[i - 1] + 1;
    }
  }
  report.increasing = inc;
  report.decreasing = dec;
  report.total = report.increasing + report.decreasing;
  return report;
}

LengthProfile length_profile(const Permutation& p, int max_length) {
  if (max_length < 2) {
    throw InvalidArgument("profile length must be >= 2");
  }
  const auto inc = totals_exact(p, max_length);
  const auto dec = totals_exact(p.reversed(), max_length);
  LengthProfile profile;
  for (int L = 2; L <= max_length; ++L) {
    profile.per_length.push_back({L, inc[L], dec[L]});
  }
  return profile;
}

int longest_increasing_length(const Permutation& p) {
  std::vector<int> tails;
  for (int v : p.values()) {
    auto it = std::lower_bound(tails.begin(), tails.end(), v);
    if (it == tails.end()) {
      tails.push_back(v);
    } else {
      *it = v;
    }
  }
  return static_cast<int>(tails.size());
}

int longest_decreasing_length(const Permutation& p) {
  return longest_increasing_length(p.complemented());
}

} // namespace monoseq
