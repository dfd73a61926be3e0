// SPDX-FileCopyrightText: (c) 2026 The monoseq authors
//
// SPDX-License-Identifier: Apache-2.0

#include "monoseq/lemmas.hpp"

#include <algorithm>
#include <bit>
#include <cmath>
#include <map>
#include <tuple>

#include "monoseq/decomposition.hpp"
#include "monoseq/error.hpp"
#include "monoseq/structure.hpp"

namespace monoseq {

// ---------------------------------------------------------------- shadows

SetFamily::SetFamily(int ground_size, int set_size,
                     std::vector<std::uint64_t> members)
    : ground_size_(ground_size), set_size_(set_size), members_(std::move(members)) {
  if (ground_size < 0 || ground_size > 64) {
    throw InvalidArgument("ground set size must be in 0..64");
  }
  if (set_size < 1 || set_size > std::max(ground_size, 1)) {
    throw InvalidArgument("member size must be in 1..ground size");
  }
  const std::uint64_t mask =
      ground_size == 64 ? ~std::uint64_t{0} : (std::uint64_t{1} << ground_size) - 1;
  for (std::uint64_t m : members_) {
    if ((m & ~mask) != 0) {
      throw InvalidArgument("member has an element outside the ground set");
    }
    if (std::popcount(m) != set_size) {
      throw InvalidArgument("members must all have " + std::to_string(set_size) +
                            " elements");
    }
  }
  std::sort(members_.begin(), members_.end());
  if (std::adjacent_find(members_.begin(), members_.end()) != members_.end()) {
    throw InvalidArgument("duplicate member in set family");
  }
}

SetFamily SetFamily::from_lists(int ground_size,
                                const std::vector<std::vector<int>>& members) {
  std::vector<std::uint64_t> masks;
  int set_size = members.empty() ? 1 : static_cast<int>(members.front().size());
  for (const auto& list : members) {
    std::uint64_t mask = 0;
    for (int e : list) {
      if (e < 0 || e >= ground_size) {
        throw InvalidArgument("element " + std::to_string(e + 1) +
                              " outside ground set");
      }
      if (mask >> e & 1u) {
        throw InvalidArgument("repeated element in a member");
      }
      mask |= std::uint64_t{1} << e;
    }
    masks.push_back(mask);
  }
  return SetFamily(ground_size, set_size, std::move(masks));
}

std::vector<std::vector<int>> SetFamily::to_lists() const {
  std::vector<std::vector<int>> out;
  for (std::uint64_t m : members_) {
    std::vector<int> list;
    for (; m != 0; m &= m - 1) {
      list.push_back(std::countr_zero(m));
    }
    out.push_back(std::move(list));
  }
  return out;
}

bool shadow_bound_holds(std::size_t family_size, std::size_t shadow_size, int b) {
  if (2 * shadow_size >= family_size) {
    return true;
  }
  return b < 63 && shadow_size >= (std::size_t{1} << b);
}

SetFamily lower_shadow(const SetFamily& family, int b) {
  if (b < 1 || b > family.set_size()) {
    throw InvalidArgument("shadow level b must satisfy 0 < b <= a = " +
                          std::to_string(family.set_size()));
  }
  std::vector<std::uint64_t> shadow;
  for (std::uint64_t member : family.members()) {
    int bits[64];
    int count = 0;
    for (std::uint64_t m = member; m != 0; m &= m - 1) {
      bits[count++] = std::countr_zero(m);
    }
    // Gosper's hack over b-subsets of the member's positions.
    std::uint64_t pick = (std::uint64_t{1} << b) - 1;
    const std::uint64_t limit = std::uint64_t{1} << count;
    while (pick < limit) {
      std::uint64_t subset = 0;
      for (std::uint64_t s = pick; s != 0; s &= s - 1) {
        subset |= std::uint64_t{1} << bits[std::countr_zero(s)];
      }
      shadow.push_back(subset);
      const std::uint64_t low = pick & -pick;
      const std::uint64_t ripple = pick + low;
      pick = (((ripple ^ pick) >> 2) / low) | ripple;
    }
  }
  std::sort(shadow.begin(), shadow.end());
  shadow.erase(std::unique(shadow.begin(), shadow.end()), shadow.end());
  MONOSEQ_ENSURE(shadow_bound_holds(family.size(), shadow.size(), b),
                 "|shadow| >= min(|F|/2, 2^b)");
  return SetFamily(family.ground_size(), b, std::move(shadow));
}

// ------------------------------------------------------ distinguishing sets

namespace {

void validate_table(const FunctionTable& table) {
  if (table.rows.empty()) {
    throw InvalidArgument("function table needs at least one row");
  }
  for (const auto& row : table.rows) {
    if (static_cast<int>(row.size()) != table.domain_size) {
      throw InvalidArgument("every row must have " +
                            std::to_string(table.domain_size) + " entries");
    }
  }
  std::vector<std::vector<int>> sorted = table.rows;
  std::sort(sorted.begin(), sorted.end());
  if (std::adjacent_find(sorted.begin(), sorted.end()) != sorted.end()) {
    throw InvalidArgument("function table rows must be pairwise different");
  }
}

void split(const FunctionTable& table, const std::vector<int>& group,
           std::vector<std::vector<int>>& sets) {
  if (group.size() <= 1) {
    return;
  }
  int column = -1;
  for (int x = 0; x < table.domain_size && column < 0; ++x) {
    for (int i : group) {
      if (table.rows[i][x] != table.rows[group.front()][x]) {
        column = x;
        break;
      }
    }
  }
  MONOSEQ_ENSURE(column >= 0, "distinct rows differ somewhere");
  std::map<int, std::vector<int>> by_value;
  for (int i : group) {
    by_value[table.rows[i][column]].push_back(i);
  }
  int majority = by_value.begin()->first;
  std::size_t best = 0;
  for (const auto& [value, members] : by_value) {
    if (members.size() > best) {
      best = members.size();
      majority = value;
    }
  }
  for (const auto& [value, members] : by_value) {
    split(table, members, sets);
    if (value != majority) {
      for (int i : members) {
        sets[i].push_back(column);
      }
    }
  }
}

} // namespace

bool distinguishing_sets_valid(const FunctionTable& table,
                               const std::vector<std::vector<int>>& sets) {
  const std::size_t m = table.rows.size();
  if (sets.size() != m) {
    return false;
  }
  for (const auto& s : sets) {
    // |X_i| <= log2 M  <=>  2^|X_i| <= M
    if (s.size() >= 63 || (std::size_t{1} << s.size()) > m) {
      return false;
    }
  }
  for (std::size_t i = 0; i < m; ++i) {
    for (std::size_t j = i + 1; j < m; ++j) {
      bool differs = false;
      for (const auto* s : {&sets[i], &sets[j]}) {
        for (int x : *s) {
          differs = differs || table.rows[i][x] != table.rows[j][x];
        }
      }
      if (!differs) {
        return false;
      }
    }
  }
  return true;
}

std::vector<std::vector<int>> distinguishing_sets(const FunctionTable& table) {
  validate_table(table);
  std::vector<std::vector<int>> sets(table.rows.size());
  std::vector<int> all(table.rows.size());
  for (std::size_t i = 0; i < all.size(); ++i) {
    all[i] = static_cast<int>(i);
  }
  split(table, all, sets);
  for (auto& s : sets) {
    std::sort(s.begin(), s.end());
  }
  MONOSEQ_ENSURE(distinguishing_sets_valid(table, sets),
                 "signature sets are small and pairwise distinguishing");
  return sets;
}

// --------------------------------------------------------- connected sets

LabeledTree::LabeledTree(int t, std::vector<std::pair<int, int>> edges)
    : edges_(std::move(edges)), adjacency_(std::max(t, 0)) {
  if (t < 1) {
    throw InvalidArgument("tree needs at least one vertex");
  }
  if (static_cast<int>(edges_.size()) != t - 1) {
    throw InvalidArgument("tree on " + std::to_string(t) + " vertices needs " +
                          std::to_string(t - 1) + " edges");
  }
  for (const auto& [a, b] : edges_) {
    if (a < 0 || a >= t || b < 0 || b >= t || a == b) {
      throw InvalidArgument("bad tree edge (" + std::to_string(a + 1) + "," +
                            std::to_string(b + 1) + ")");
    }
    adjacency_[a].push_back(b);
    adjacency_[b].push_back(a);
  }
  std::vector<char> seen(t, 0);
  std::vector<int> stack{0};
  seen[0] = 1;
  int reached = 0;
  while (!stack.empty()) {
    const int v = stack.back();
    stack.pop_back();
    ++reached;
    for (int w : adjacency_[v]) {
      if (!seen[w]) {
        seen[w] = 1;
        stack.push_back(w);
      }
    }
  }
  if (reached != t) {
    throw InvalidArgument("edges do not form a connected tree");
  }
}

LabeledTree LabeledTree::path(int t) {
  std::vector<std::pair<int, int>> edges;
  for (int v = 0; v + 1 < t; ++v) {
    edges.emplace_back(v, v + 1);
  }
  return LabeledTree(t, std::move(edges));
}

LabeledTree LabeledTree::star(int t) {
  std::vector<std::pair<int, int>> edges;
  for (int v = 1; v < t; ++v) {
    edges.emplace_back(0, v);
  }
  return LabeledTree(t, std::move(edges));
}

BigCount count_connected_subsets(const LabeledTree& tree, int c) {
  const int t = tree.size();
  if (c < 1 || c > t) {
    throw InvalidArgument("subset size c must satisfy 1 <= c <= t = " +
                          std::to_string(t));
  }
  // Root at 0; process vertices children-first.
  std::vector<int> parent(t, -1);
  std::vector<int> order;
  order.reserve(t);
  std::vector<int> stack{0};
  parent[0] = 0;
  while (!stack.empty()) {
    const int v = stack.back();
    stack.pop_back();
    order.push_back(v);
    for (int w : tree.adjacency()[v]) {
      if (parent[w] < 0) {
        parent[w] = v;
        stack.push_back(w);
      }
    }
  }
  // ways[v][s]: connected s-sets whose vertex closest to the root is v.
  std::vector<std::vector<BigCount>> ways(t);
  BigCount total = 0;
  for (auto it = order.rbegin(); it != order.rend(); ++it) {
    const int v = *it;
    std::vector<BigCount> acc(c + 1, 0);
    acc[1] = 1;
    for (int w : tree.adjacency()[v]) {
      if (w == parent[v] && v != 0) {
        continue;
      }
      if (parent[w] != v || w == v) {
        continue;
      }
      std::vector<BigCount> next = acc;
      for (int s = 1; s <= c; ++s) {
        if (acc[s] == 0) {
          continue;
        }
        for (int r = 1; s + r <= c; ++r) {
          if (ways[w][r] != 0) {
            next[s + r] += acc[s] * ways[w][r];
          }
        }
      }
      acc = std::move(next);
    }
    total += acc[c];
    ways[v] = std::move(acc);
  }
  MONOSEQ_ENSURE(total >= t - c + 1, "at least t - c + 1 connected c-sets");
  return total;
}

// ---------------------------------------------------------- chain bounds

namespace {

// ways[x][L-1]: chains of L elements with maximum x (or minimum x when
// `upward` is false).
std::vector<std::vector<BigCount>> chains_at(const Poset& p, int m, bool upward) {
  auto order = topological_order(p);
  if (!upward) {
    std::reverse(order.begin(), order.end());
  }
  std::vector<std::vector<BigCount>> ways(p.size(), std::vector<BigCount>(m, 0));
  for (int a : order) {
    ways[a][0] = 1;
  }
  for (int a : order) {
    for (int b = 0; b < p.size(); ++b) {
      if (upward ? p.less(a, b) : p.less(b, a)) {
        for (int L = 1; L < m; ++L) {
          ways[b][L] += ways[a][L - 1];
        }
      }
    }
  }
  return ways;
}

} // namespace

BigCount count_chains_through(const Poset& p, int element, int m) {
  if (element < 0 || element >= p.size()) {
    throw InvalidArgument("anchor element out of range");
  }
  if (m < 1) {
    throw InvalidArgument("chain size must be >= 1");
  }
  const auto below = chains_at(p, m, true);
  const auto above = chains_at(p, m, false);
  BigCount total = 0;
  for (int a = 1; a <= m; ++a) {
    total += below[element][a - 1] * above[element][m - a];
  }
  return total;
}

BigCount count_maximum_chains_through(const Poset& p, int element) {
  const Decomposition dec = decompose(p);
  // Chains from the first level up to `element` hitting every level.
  std::vector<BigCount> from_bottom(p.size(), 0);
  if (dec.height == 0) {
    return 0;
  }
  for (int x : dec.levels[0]) {
    from_bottom[x] = 1;
  }
  for (int i = 0; i + 1 < dec.height; ++i) {
    for (const auto& [x, y] : dec.hasse[i]) {
      from_bottom[y] += from_bottom[x];
    }
  }
  return from_bottom[element] * dec.u[element];
}

SignatureBoundReport signature_bound_check(const Poset& p, int k, int ell,
                                           std::optional<int> anchor) {
  SignatureBoundReport report;
  if (k < 1 || ell < 1) {
    report.precondition_detail = "k and ell must be positive";
    return report;
  }
  const int h = height(p);
  if (h != k + ell) {
    report.precondition_detail = "height " + std::to_string(h) +
                                 " differs from k + ell = " +
                                 std::to_string(k + ell);
    return report;
  }
  if (anchor && (*anchor < 0 || *anchor >= p.size())) {
    throw InvalidArgument("anchor element out of range");
  }
  report.maximum_chains = anchor ? count_maximum_chains_through(p, *anchor)
                                 : decompose(p).maximum_chain_count();
  const BigCount& big_m = report.maximum_chains;
  if (big_m < 1) {
    report.precondition_detail = "no maximum chain (through the anchor)";
    return report;
  }
  // log2 M + 1 <= k/4  <=>  16 M^4 <= 2^k
  BigCount lhs = big_m * big_m;
  lhs *= lhs;
  lhs *= 16;
  BigCount rhs = 1;
  rhs <<= k;
  if (lhs > rhs) {
    report.precondition_detail = "log2 M + 1 exceeds k/4";
    return report;
  }
  report.preconditions_hold = true;

  report.chain_count = anchor ? count_chains_through(p, *anchor, k + 1)
                              : count_chains_of_size(p, k + 1);
  Rational factor = 1;
  if (ell > 1) {
    // The series is costly on wide rationals; sweeps repeat few triples.
    thread_local std::map<std::tuple<int, int, BigCount>, Rational> factors;
    const auto key = std::make_tuple(k, ell, big_m);
    const auto hit = factors.find(key);
    if (hit != factors.end()) {
      factor = hit->second;
    } else {
      const long double log2_m =
          std::log2(static_cast<long double>(big_m.convert_to<double>()));
      Rational m_lower = rational_lower(log2_m) + 1;
      if (m_lower < 1) {
        m_lower = 1;
      }
      const Rational exponent = Rational(2 * (ell - 1)) * m_lower / Rational(k);
      factor = exp_neg_upper(exponent);
      if (factors.size() < 4096) {
        factors.emplace(key, factor);
      }
    }
  }
  report.bound_upper = factor * Rational(big_m) * Rational(binomial(k + ell, k + 1));
  report.bound_approx = static_cast<double>(report.bound_upper);
  report.satisfied = Rational(report.chain_count) >= report.bound_upper;
  return report;
}

SurplusBoundReport surplus_conclusion_check(const Poset& p, int k, int t) {
  SurplusBoundReport report;
  if (!p.witness()) {
    throw InvalidArgument("surplus check needs an order-dimension-2 witness");
  }
  report.height = height(p);
  report.width = p.empty() ? 0 : width(p);
  report.surplus = surplus(p, k);
  report.homogenous = h_k(p, k);
  if (t < 1 || 2 * t > k) {
    report.precondition_detail = "needs 0 < t <= k/2";
    return report;
  }
  const int root = static_cast<int>(std::lround(std::sqrt(static_cast<double>(t))));
  if (root * root == t) {
    report.threshold = 1;
    report.threshold <<= root - 1;
  } else {
    const long double value = std::pow(2.0L, std::sqrt(static_cast<long double>(t)) - 1.0L);
    report.threshold = static_cast<unsigned long long>(std::ceil(value));
  }
  if (report.height < report.width) {
    report.precondition_detail = "needs height >= width";
    return report;
  }
  if (report.surplus < 3LL * t) {
    report.precondition_detail = "needs surplus >= 3t";
    return report;
  }
  report.preconditions_hold = true;
  report.satisfied = report.homogenous >= report.threshold;
  return report;
}

LargeSurplusReport large_surplus_check(const Poset& p, int k, int d, int s) {
  LargeSurplusReport report;
  if (d < 1 || d > k) {
    report.precondition_detail = "needs 1 <= d <= k";
    return report;
  }
  if (p.empty()) {
    report.precondition_detail = "empty poset";
    return report;
  }
  if (surplus(p, k) < s) {
    report.precondition_detail = "surplus below s";
    return report;
  }
  report.min_cut = min_height_reducing_set(p).size();
  if (2 * static_cast<long long>(report.min_cut) <= s) {
    report.precondition_detail = "a set of at most s/2 elements lowers the height";
    return report;
  }
  report.preconditions_hold = true;
  report.antichains = count_antichains_of_size(p, k + 1);
  report.maximum_chains = decompose(p).maximum_chain_count();
  report.antichain_target = 1;
  report.antichain_target <<= d;
  report.chain_target = 1;
  report.chain_target <<= (s / (2 * d));
  report.satisfied = report.antichains >= report.antichain_target ||
                     report.maximum_chains >= report.chain_target;
  return report;
}

} // namespace monoseq
