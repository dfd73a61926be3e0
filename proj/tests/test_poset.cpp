// SPDX-FileCopyrightText: (c) 2026 The monoseq authors
//
// SPDX-License-Identifier: Apache-2.0

#include <doctest.h>

#include <set>

#include "monoseq/counting.hpp"
#include "monoseq/decomposition.hpp"
#include "monoseq/error.hpp"
#include "monoseq/perm_core.hpp"
#include "monoseq/poset.hpp"
#include "oracles.hpp"

using namespace monoseq;

namespace {

Poset tau_poset(int k, int n) { return Poset::from_permutation(build_tau(k, n)); }
Poset sigma_poset(int k, int i) { return Poset::from_permutation(build_sigma_extremal(k, i)); }

// Random order on n elements that need not have dimension two.
Poset random_relation(int n, double density, std::mt19937_64& rng) {
  std::bernoulli_distribution coin(density);
  std::vector<std::pair<int, int>> pairs;
  for (int a = 0; a < n; ++a) {
    for (int b = a + 1; b < n; ++b) {
      if (coin(rng)) {
        pairs.emplace_back(a, b);
      }
    }
  }
  return Poset::from_relation(n, pairs);
}

} // namespace

TEST_CASE("relations are closed and checked") {
  const std::vector<std::pair<int, int>> path = {{0, 1}, {1, 2}};
  const Poset p = Poset::from_relation(3, path);
  CHECK(p.less(0, 2));
  CHECK_FALSE(p.less(2, 0));
  CHECK_FALSE(p.witness().has_value());
  const std::vector<std::pair<int, int>> cycle = {{0, 1}, {1, 0}};
  CHECK_THROWS_AS(Poset::from_relation(2, cycle), InvalidArgument);
  const std::vector<std::pair<int, int>> loop = {{1, 1}};
  CHECK_THROWS_AS(Poset::from_relation(2, loop), InvalidArgument);
  CHECK(p.covers() == path);
  // Closure is idempotent.
  const auto all = p.covers();
  std::vector<std::pair<int, int>> closed;
  for (int a = 0; a < 3; ++a) {
    for (int b = 0; b < 3; ++b) {
      if (p.less(a, b)) {
        closed.emplace_back(a, b);
      }
    }
  }
  CHECK(Poset::from_relation(3, closed) == p);
}

TEST_CASE("permutation posets") {
  CHECK(Poset::from_permutation(Permutation::identity(4)) == Poset::chain(4));
  CHECK(Poset::from_permutation(Permutation::from_one_based(std::vector<int>{3, 2, 1})) ==
        Poset::antichain(3));
  std::mt19937_64 rng(1);
  for (int trial = 0; trial < 200; ++trial) {
    const int n = 1 + static_cast<int>(rng() % 20);
    const Permutation s = testing::random_permutation(n, rng);
    const Poset p = Poset::from_permutation(s);
    for (int i = 0; i < n; ++i) {
      for (int j = 0; j < n; ++j) {
        CHECK(p.less(i, j) == (i < j && s[i] < s[j]));
      }
    }
    const Poset d = dual(p);
    for (int i = 0; i < n; ++i) {
      for (int j = i + 1; j < n; ++j) {
        CHECK(p.comparable(i, j) != d.comparable(i, j));
      }
    }
    CHECK(dual(d) == p);
    CHECK(p.reversed_order().reversed_order() == p);
    CHECK(width_by_matching(p) == longest_decreasing_length(s));
    CHECK(height(p) == longest_increasing_length(s));
  }
}

TEST_CASE("dual needs a witness") {
  CHECK(dual(Poset::chain(5)) == Poset::antichain(5));
  const std::vector<std::pair<int, int>> pairs = {{0, 1}};
  CHECK_THROWS_AS(dual(Poset::from_relation(2, pairs)), InvalidArgument);
  const Poset d = dual(tau_poset(3, 13));
  CHECK(height(d) == 3);
  CHECK(width(d) == 5);
}

TEST_CASE("reversed order") {
  std::mt19937_64 rng(2);
  for (int trial = 0; trial < 100; ++trial) {
    const Poset p = random_relation(1 + static_cast<int>(rng() % 10), 0.3, rng);
    const Poset r = p.reversed_order();
    for (int a = 0; a < p.size(); ++a) {
      for (int b = 0; b < p.size(); ++b) {
        CHECK(r.less(a, b) == p.less(b, a));
      }
    }
    CHECK(r.reversed_order() == p);
  }
  CHECK(Poset::antichain(4).reversed_order() == Poset::antichain(4));
  // The top level of the reverse is A'_1 of the original.
  for (int k = 2; k <= 4; ++k) {
    const Poset p = sigma_poset(k, 1);
    const Decomposition dec = decompose(p);
    const Poset r = p.reversed_order();
    const Decomposition rdec = decompose(r);
    std::set<int> top;
    for (int x : rdec.levels.back()) {
      top.insert(r.labels()[x]);
    }
    std::set<int> a1(dec.a_prime[0].begin(), dec.a_prime[0].end());
    CHECK(top == a1);
  }
}

TEST_CASE("height and width") {
  const Poset t = tau_poset(3, 13);
  CHECK(height(t) == 5);
  CHECK(width(t) == 3);
  CHECK(height(Poset::chain(6)) == 6);
  CHECK(width(Poset::chain(6)) == 1);
  const Poset s = sigma_poset(3, 1);
  CHECK(height(s) == 4);
  CHECK(width(s) == 4);
  std::mt19937_64 rng(3);
  for (int trial = 0; trial < 100; ++trial) {
    const Poset p = random_relation(1 + static_cast<int>(rng() % 9), 0.35, rng);
    CHECK(height(p) == testing::longest_chain_by_subsets(p));
    int w = 0;
    for (int m = 1; m <= p.size(); ++m) {
      if (testing::homogenous_by_subsets(p, m).decreasing > 0) {
        w = m;
      }
    }
    CHECK(width(p) == w);
  }
}

TEST_CASE("decomposition examples") {
  Decomposition dec = decompose(Poset::chain(5));
  CHECK(dec.height == 5);
  for (int i = 0; i < 5; ++i) {
    CHECK(dec.levels[i].size() == 1);
    CHECK(dec.sigma[i] == 1);
  }
  for (const auto& u : dec.u) {
    CHECK(u == 1);
  }
  const std::vector<int> lengths = {4, 4, 4};
  dec = decompose(Poset::disjoint_chains(lengths));
  CHECK(dec.height == 4);
  for (int i = 0; i < 4; ++i) {
    CHECK(dec.levels[i].size() == 3);
    CHECK(dec.sigma[i] == 3);
  }
  dec = decompose(sigma_poset(3, 1));
  CHECK(dec.levels[0].size() == 4);
  CHECK(dec.maximum_chain_count() == count_chains_of_size(sigma_poset(3, 1), 4));
}

TEST_CASE("chain and antichain counts") {
  CHECK(count_chains_of_size(tau_poset(3, 13), 4) == 7);
  CHECK(count_chains_of_size(Poset::antichain(6), 2) == 0);
  CHECK(count_chains_of_size(Poset::from_permutation(Permutation::identity(6)), 3) == 20);
  CHECK(count_antichains_of_size(sigma_poset(3, 1), 4) == 1);
  CHECK(count_antichains_of_size(sigma_poset(3, 2), 4) == 2);
  CHECK(count_antichains_of_size(Poset::chain(5), 2) == 0);
  std::mt19937_64 rng(4);
  for (int trial = 0; trial < 150; ++trial) {
    const Poset p = random_relation(1 + static_cast<int>(rng() % 10), 0.3, rng);
    const int m = 1 + static_cast<int>(rng() % 4);
    const auto brute = testing::homogenous_by_subsets(p, m);
    CHECK(count_chains_of_size(p, m) == brute.increasing);
    CHECK(count_antichains_of_size(p, m) == brute.decreasing);
  }
  const Poset bare = Poset::from_relation(40, std::vector<std::pair<int, int>>{});
  CHECK_THROWS_AS(count_antichains_of_size(bare, 20, 1000), BudgetExceeded);
}

TEST_CASE("homogenous sets") {
  CHECK(h_k(sigma_poset(3, 1), 3) == 7);
  CHECK(h_k(Poset::antichain(3), 3) == 0);
  std::mt19937_64 rng(5);
  for (int trial = 0; trial < 300; ++trial) {
    const int n = 1 + static_cast<int>(rng() % 25);
    const int k = 1 + static_cast<int>(rng() % 4);
    const Permutation s = testing::random_permutation(n, rng);
    const Poset p = Poset::from_permutation(s);
    const auto c = count_monotone(s, k);
    CHECK(count_chains_of_size(p, k + 1) == c.increasing);
    CHECK(count_antichains_of_size(p, k + 1) == c.decreasing);
    CHECK(h_k(p, k) == c.total);
  }
}

TEST_CASE("surplus") {
  CHECK(surplus(tau_poset(3, 13), 3) == -2);
  CHECK(surplus(Poset::antichain(6), 3) == 3);
  CHECK(surplus(Poset::chain(7), 3) == 7 - 21);
}

TEST_CASE("index sets") {
  IndexSets s = index_sets(sigma_poset(3, 1), 3);
  CHECK(s.f == std::vector<int>{1});
  const std::vector<int> lengths = {5, 5, 5};
  s = index_sets(Poset::disjoint_chains(lengths), 3);
  CHECK(s.f.empty());
  s = index_sets(Poset::antichain(4), 3);
  CHECK(s.f == std::vector<int>{1});
  CHECK_FALSE(s.threshold.has_value());
  // 14 > 3 * 4, so ell = 1, q = 2 and S = 3 (1 + 2) + 50 sqrt 3 log2 3.
  s = index_sets(tau_poset(3, 14), 3);
  REQUIRE(s.threshold.has_value());
  CHECK(s.ell == 1);
  CHECK(s.q == 2);
  const double expected = 9.0 + 50.0 * std::sqrt(3.0) * std::log2(3.0);
  CHECK(static_cast<double>(*s.threshold) >= expected);
  CHECK(static_cast<double>(*s.threshold) == doctest::Approx(expected).epsilon(1e-12));
  CHECK(s.surplus == 14 - 5 * 3);
}

TEST_CASE("decomposition laws on random witnessed posets") {
  std::mt19937_64 rng(6);
  for (int trial = 0; trial < 500; ++trial) {
    const int n = 1 + static_cast<int>(rng() % 25);
    const int k = 1 + static_cast<int>(rng() % 4);
    const Poset p = Poset::from_permutation(testing::random_permutation(n, rng));
    const Decomposition dec = decompose(p);
    const int h = dec.height;
    CHECK(dec.maximum_chain_count() == count_chains_of_size(p, h));
    long long level_sum = 0;
    for (int i = 0; i < h; ++i) {
      level_sum += static_cast<long long>(dec.levels[i].size()) - k;
    }
    CHECK(surplus(p, k) == level_sum);
    for (int i = 0; i + 1 < h; ++i) {
      CHECK(dec.sigma[i] >= dec.sigma[i + 1]);
      bool all_degree_one = true;
      for (int y : dec.a_prime[i + 1]) {
        all_degree_one = all_degree_one && dec.down_degree[y] == 1;
      }
      CHECK((dec.sigma[i] == dec.sigma[i + 1]) == all_degree_one);
      // First clause of the F-lemma and its chain-sum companion.
      if (static_cast<int>(dec.levels[i].size()) >= k + 1) {
        std::vector<int> part = dec.levels[i];
        part.insert(part.end(), dec.b[i + 1].begin(), dec.b[i + 1].end());
        std::sort(part.begin(), part.end());
        const auto antichains = count_antichains_of_size(p.induced(part), k + 1);
        const int exponent = std::min<int>(k, static_cast<int>(dec.b[i + 1].size()));
        CHECK(antichains >= (BigCount(1) << exponent));
        CHECK(dec.sigma[i] >= dec.sigma[i + 1] +
                                  static_cast<long long>(dec.a_prime[i + 1].size()) -
                                  static_cast<long long>(dec.b[i + 1].size()));
      }
    }
  }
}

TEST_CASE("decomposition against the definitions") {
  std::mt19937_64 rng(7);
  for (int trial = 0; trial < 150; ++trial) {
    const Poset p = random_relation(1 + static_cast<int>(rng() % 9), 0.3, rng);
    const Decomposition dec = decompose(p);
    const auto chains = testing::maximum_chains_listed(p);
    CHECK(dec.maximum_chain_count() == chains.size());
    // u(x): maximum chains through x, divided among chains from below.
    std::vector<std::set<std::vector<int>>> tails(p.size());
    for (const auto& c : chains) {
      for (std::size_t i = 0; i < c.size(); ++i) {
        tails[c[i]].insert(std::vector<int>(c.begin() + i, c.end()));
      }
    }
    for (int x = 0; x < p.size(); ++x) {
      const int level = dec.level_of[x];
      CHECK(chain_length_ending_at(p)[x] == level + 1);
      CHECK(dec.u[x] == tails[x].size());
      const bool in_prime = std::count(dec.a_prime[level].begin(), dec.a_prime[level].end(), x);
      CHECK(in_prime == (dec.u[x] >= 1));
    }
    for (int i = 0; i < dec.height; ++i) {
      for (std::size_t a = 0; a < dec.levels[i].size(); ++a) {
        for (std::size_t b = a + 1; b < dec.levels[i].size(); ++b) {
          CHECK_FALSE(p.comparable(dec.levels[i][a], dec.levels[i][b]));
        }
      }
    }
  }
}
