// SPDX-FileCopyrightText: (c) 2026 The monoseq authors
//
// SPDX-License-Identifier: Apache-2.0

#include <bit>
#include <chrono>
#include <cstdint>

#include "monoseq/error.hpp"
#include "monoseq/perm_core.hpp"
#include "monoseq/poset.hpp"
#include "monoseq/search.hpp"

namespace monoseq {

namespace {

class NaturalOrderSearch {
 public:
  NaturalOrderSearch(int n, int k)
      : n_(n), k_(k), down_(n, 0), chains_(n, std::vector<std::uint64_t>(k + 2, 0)) {}

  void run(std::uint64_t bound) {
    best_ = bound;
    descend(0, 0);
  }

  std::uint64_t best() const { return best_; }
  std::uint64_t nodes() const { return nodes_; }
  const std::vector<std::uint32_t>& witness() const { return witness_; }

 private:
  bool down_closed(std::uint32_t mask) const {
    for (std::uint32_t m = mask; m != 0; m &= m - 1) {
      const int i = std::countr_zero(m);
      if ((down_[i] & ~mask) != 0) {
        return false;
      }
    }
    return true;
  }

  bool is_antichain(std::uint32_t mask) const {
    for (std::uint32_t m = mask; m != 0; m &= m - 1) {
      const int i = std::countr_zero(m);
      if ((down_[i] & mask) != 0) {
        return false;
      }
    }
    return true;
  }

  // Homogenous (k+1)-sets whose largest label is j.
  std::uint64_t added_by(int j) {
    const std::uint32_t below = down_[j];
    auto& c = chains_[j];
    std::fill(c.begin(), c.end(), 0);
    c[1] = 1;
    for (std::uint32_t m = below; m != 0; m &= m - 1) {
      const int i = std::countr_zero(m);
      for (int L = 2; L <= k_ + 1; ++L) {
        c[L] += chains_[i][L - 1];
      }
    }
    std::uint64_t count = c[k_ + 1];
    // Later labels are never below j, so its incomparables so far are the
    // earlier labels outside its down-set.
    const std::uint32_t free = ((std::uint32_t{1} << j) - 1) & ~below;
    if (std::popcount(free) >= k_) {
      for (std::uint32_t s = free;; s = (s - 1) & free) {
        if (std::popcount(s) == k_ && is_antichain(s)) {
          ++count;
        }
        if (s == 0) {
          break;
        }
      }
    }
    return count;
  }

  void descend(int j, std::uint64_t partial) {
    ++nodes_;
    if (j == n_) {
      if (partial < best_ || witness_.empty()) {
        best_ = partial;
        witness_ = down_;
      }
      return;
    }
    const std::uint32_t limit = std::uint32_t{1} << j;
    for (std::uint32_t mask = 0; mask < limit; ++mask) {
      if (!down_closed(mask)) {
        continue;
      }
      down_[j] = mask;
      const std::uint64_t next = partial + added_by(j);
      if (next <= best_) {
        descend(j + 1, next);
      }
    }
    down_[j] = 0;
  }

  int n_;
  int k_;
  std::vector<std::uint32_t> down_;
  std::vector<std::vector<std::uint64_t>> chains_;
  std::uint64_t best_ = 0;
  std::uint64_t nodes_ = 0;
  std::vector<std::uint32_t> witness_;
};

} // namespace

PosetSearchResult min_hk_over_posets(int n, int k) {
  if (n < 1 || n > kMaxPosetSearchN) {
    throw InvalidArgument("poset search needs 1 <= n <= " +
                          std::to_string(kMaxPosetSearchN));
  }
  if (k < 1) {
    throw InvalidArgument("k must be >= 1");
  }
  const auto start = std::chrono::steady_clock::now();
  NaturalOrderSearch search(n, k);
  search.run(m_tau_formula(k, n).convert_to<std::uint64_t>());
  MONOSEQ_ENSURE(!search.witness().empty(), "the tau poset attains the bound");

  std::vector<std::pair<int, int>> relation;
  for (int j = 0; j < n; ++j) {
    for (std::uint32_t m = search.witness()[j]; m != 0; m &= m - 1) {
      relation.emplace_back(std::countr_zero(m), j);
    }
  }
  const Poset minimizer = Poset::from_relation(n, relation);
  MONOSEQ_ENSURE(h_k(minimizer, k) == search.best(), "minimizer count rechecked");

  PosetSearchResult out;
  out.n = n;
  out.k = k;
  out.minimum = search.best();
  out.witness_covers = minimizer.covers();
  out.posets_visited = search.nodes();
  out.elapsed_seconds =
      std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
  return out;
}

} // namespace monoseq
