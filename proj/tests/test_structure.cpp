// SPDX-FileCopyrightText: (c) 2026 The monoseq authors
//
// SPDX-License-Identifier: Apache-2.0

#include <doctest.h>

#include <algorithm>
#include <numeric>

#include "monoseq/decomposition.hpp"
#include "monoseq/error.hpp"
#include "monoseq/lemmas.hpp"
#include "monoseq/perm_core.hpp"
#include "monoseq/poset.hpp"
#include "monoseq/structure.hpp"
#include "oracles.hpp"

using namespace monoseq;

namespace {

Poset sigma_poset(int k, int i) { return Poset::from_permutation(build_sigma_extremal(k, i)); }

std::vector<int> sorted(std::vector<int> v) {
  std::sort(v.begin(), v.end());
  return v;
}

} // namespace

TEST_CASE("minimum height-reducing sets") {
  const std::vector<int> lengths = {4, 4, 4};
  const Poset chains = Poset::disjoint_chains(lengths);
  const auto cut = min_height_reducing_set(chains);
  CHECK(cut.size() == 3);
  CHECK(height(chains.without(cut)) == 3);
  CHECK(min_height_reducing_set(Poset::chain(6)).size() == 1);
  const Poset tau = Poset::from_permutation(build_tau(3, 13));
  CHECK(min_height_reducing_set(tau).size() == 1);
  CHECK(min_height_reducing_set(Poset::antichain(5)).size() == 5);
  CHECK_THROWS_AS(min_height_reducing_set(Poset()), InvalidArgument);
}

TEST_CASE("minimum cut agrees with a brute-force hitting set") {
  std::mt19937_64 rng(11);
  for (int trial = 0; trial < 400; ++trial) {
    const int n = 1 + static_cast<int>(rng() % 12);
    const Poset p = Poset::from_permutation(testing::random_permutation(n, rng));
    const auto cut = min_height_reducing_set(p);
    const auto brute = testing::min_hitting_set_brute(p);
    CHECK(cut.size() == brute.size());
    CHECK(sorted(cut) == brute);
    CHECK(height(p.without(cut)) == height(p) - 1);
  }
}

TEST_CASE("maximum chain elements") {
  const Poset tau = Poset::from_permutation(build_tau(3, 13));
  CHECK(maximum_chain_elements(tau).size() == 5);
  CHECK(maximum_chain_elements(Poset::antichain(4)).size() == 4);
}

TEST_CASE("pruning") {
  PruneResult r = prune(Poset::chain(3), 2, 1);
  CHECK(r.result.empty());
  REQUIRE(r.trace.size() == 3);
  for (const auto& round : r.trace) {
    CHECK(round.removed.size() == 1);
    CHECK_FALSE(round.dualized);
  }
  CHECK(r.trace.back().size_after == 0);

  r = prune(Poset::antichain(4), 2, 1);
  CHECK(r.result.empty());
  REQUIRE_FALSE(r.trace.empty());
  CHECK(r.trace.front().removed.empty());
  CHECK(r.trace.front().dualized);
  CHECK(r.trace.front().height_after == 4);
  CHECK(r.trace.front().width_after == 1);
  CHECK(r.trace.size() == 5);

  const std::vector<int> lengths = {4, 4, 4};
  const Poset chains = Poset::disjoint_chains(lengths);
  r = prune(chains, 3, 2);
  CHECK(r.trace.empty());
  CHECK(r.result == chains);

  CHECK_THROWS_AS(prune(Poset::chain(3), 2, 0), InvalidArgument);
  const std::vector<std::pair<int, int>> pairs = {{0, 1}};
  CHECK_THROWS_AS(prune(Poset::from_relation(3, pairs), 2, 1), InvalidArgument);
}

TEST_CASE("pruning ends at a fixpoint") {
  std::mt19937_64 rng(12);
  for (int trial = 0; trial < 200; ++trial) {
    const int n = 1 + static_cast<int>(rng() % 16);
    const int t = 1 + static_cast<int>(rng() % 3);
    const Poset p = Poset::from_permutation(testing::random_permutation(n, rng));
    const PruneResult r = prune(p, 2, t);
    if (!r.result.empty()) {
      CHECK(height(r.result) >= width(r.result));
      CHECK(min_height_reducing_set(r.result).size() > static_cast<std::size_t>(t));
    }
    int size = p.size();
    for (const auto& round : r.trace) {
      CHECK(round.removed.size() <= static_cast<std::size_t>(t));
      size -= static_cast<int>(round.removed.size());
      CHECK(round.size_after == size);
    }
    CHECK(r.result.size() == size);
  }
}

TEST_CASE("disjoint chain covers") {
  const std::vector<int> lengths = {4, 4, 4};
  const Poset chains = Poset::disjoint_chains(lengths);
  ChainCover cover = disjoint_chain_cover(chains, 1, 4, 3);
  CHECK(cover.chains.size() == 3);
  CHECK(cover.deficiency == 0);
  CHECK(cover.preconditions_hold);
  CHECK(cover.sigma_bound_holds);

  const Poset s = sigma_poset(3, 1);
  const Decomposition dec = decompose(s);
  const Poset rest = s.without(dec.levels[0]);
  cover = disjoint_chain_cover(rest, 1, 3, 3);
  CHECK(cover.chains.size() == 3);
  CHECK(cover.deficiency == 0);
  for (const auto& c : cover.chains) {
    CHECK(c.size() == 3);
    for (std::size_t a = 0; a + 1 < c.size(); ++a) {
      CHECK(rest.less(c[a], c[a + 1]));
    }
  }

  const std::vector<std::pair<int, int>> vee = {{0, 2}, {1, 2}};
  const Poset v = Poset::from_relation(3, vee);
  CHECK_THROWS_AS(disjoint_chain_cover(v, 1, 2, 2), InvalidArgument);
  cover = disjoint_chain_cover(v, 1, 2, 2, false);
  CHECK(cover.chains.size() == 1);
  CHECK(cover.deficiency == 1);
  CHECK_FALSE(cover.preconditions_hold);
  CHECK_THROWS_AS(disjoint_chain_cover(v, 2, 1, 2, false), InvalidArgument);
}

TEST_CASE("chain covers are disjoint and maximum") {
  std::mt19937_64 rng(13);
  for (int trial = 0; trial < 200; ++trial) {
    const int n = 2 + static_cast<int>(rng() % 14);
    const Poset p = Poset::from_permutation(testing::random_permutation(n, rng));
    const Decomposition dec = decompose(p);
    if (dec.height < 2) {
      continue;
    }
    const int k = static_cast<int>(dec.a_prime[0].size());
    const ChainCover cover = disjoint_chain_cover(p, 1, dec.height, k, false);
    std::vector<int> seen;
    for (const auto& c : cover.chains) {
      CHECK(static_cast<int>(c.size()) == dec.height);
      seen.insert(seen.end(), c.begin(), c.end());
    }
    std::sort(seen.begin(), seen.end());
    CHECK(std::adjacent_find(seen.begin(), seen.end()) == seen.end());
    // At most min |A'_i| disjoint maximum chains exist.
    std::size_t best = p.size();
    for (const auto& level : dec.a_prime) {
      best = std::min(best, level.size());
    }
    CHECK(cover.chains.size() <= best);
    CHECK(cover.chains.size() >= 1);
  }
}

TEST_CASE("mixed extremal structure") {
  for (int k = 3; k <= 6; ++k) {
    ExampleReport r = verify_example_structure(sigma_poset(k, 1), k);
    CHECK(r.passed());
    CHECK(r.case_label == "i");
    CHECK(r.antichain_count == 1);
    CHECK(r.chain_count == 2 * k);
    r = verify_example_structure(sigma_poset(k, 2), k);
    CHECK(r.passed());
    CHECK(r.case_label == "ii");
    CHECK(r.antichain_count == 2);
    CHECK(r.chain_count == 2 * k - 1);
  }
  const ExampleReport r = verify_example_structure(Poset::from_permutation(build_tau(3, 13)), 3);
  CHECK_FALSE(r.passed());
  CHECK(r.failed_clause == "minimal-elements");
  CHECK(r.case_label.empty());
  CHECK_THROWS_AS(verify_example_structure(Poset::chain(12), 3), InvalidArgument);
}

TEST_CASE("large surplus checker on all small permutation posets") {
  long long checked = 0;
  for (int n = 1; n <= 7; ++n) {
    std::vector<int> values(n);
    std::iota(values.begin(), values.end(), 1);
    do {
      const Poset p = Poset::from_permutation(Permutation::from_one_based(values));
      for (int k = 1; k <= 3; ++k) {
        for (int d = 1; d <= k; ++d) {
          for (int s = 0; s <= 4; ++s) {
            const LargeSurplusReport r = large_surplus_check(p, k, d, s);
            if (r.preconditions_hold) {
              ++checked;
              CHECK(r.satisfied);
            }
          }
        }
      }
    } while (std::next_permutation(values.begin(), values.end()));
  }
  CHECK(checked > 0);
}

TEST_CASE("large surplus checker preconditions") {
  CHECK_FALSE(large_surplus_check(Poset::antichain(6), 2, 3, 2).preconditions_hold);
  CHECK_FALSE(large_surplus_check(Poset::chain(6), 2, 1, 0).preconditions_hold);
  const LargeSurplusReport r = large_surplus_check(Poset::antichain(6), 2, 2, 4);
  CHECK(r.preconditions_hold);
  CHECK(r.min_cut == 6);
  CHECK(r.antichains == 20);
  CHECK(r.antichain_target == 4);
  CHECK(r.chain_target == 2);
  CHECK(r.satisfied);
}
