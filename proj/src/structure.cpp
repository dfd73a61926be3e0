// SPDX-FileCopyrightText: (c) 2026 The monoseq authors
//
// SPDX-License-Identifier: Apache-2.0

#include "monoseq/structure.hpp"

#include <algorithm>
#include <functional>

#include "monoseq/error.hpp"
#include "monoseq/graph.hpp"

namespace monoseq {

std::vector<int> maximum_chain_elements(const Poset& p) {
  const int h = height(p);
  const auto down = chain_length_ending_at(p);
  const auto up = chain_length_starting_at(p);
  std::vector<int> out;
  for (int x = 0; x < p.size(); ++x) {
    if (down[x] + up[x] - 1 == h) {
      out.push_back(x);
    }
  }
  return out;
}

namespace {

// Minimum cut of the chains with exactly `h` elements in `p` (0 if none).
std::vector<int> cut_of_chains_with(const Poset& p, int h) {
  if (p.empty() || height(p) < h) {
    return {};
  }
  const auto down = chain_length_ending_at(p);
  const auto on_chain = maximum_chain_elements(p);
  std::vector<int> index(p.size(), -1);
  for (std::size_t i = 0; i < on_chain.size(); ++i) {
    index[on_chain[i]] = static_cast<int>(i);
  }
  std::vector<std::vector<int>> out(on_chain.size());
  std::vector<int> sources;
  std::vector<int> sinks;
  for (std::size_t i = 0; i < on_chain.size(); ++i) {
    const int x = on_chain[i];
    if (down[x] == 1) {
      sources.push_back(static_cast<int>(i));
    }
    if (down[x] == h) {
      sinks.push_back(static_cast<int>(i));
    }
    for (int y : on_chain) {
      if (down[y] == down[x] + 1 && p.less(x, y)) {
        out[i].push_back(index[y]);
      }
    }
  }
  std::vector<int> cut = minimum_vertex_cut(out, sources, sinks);
  for (int& v : cut) {
    v = on_chain[v];
  }
  return cut;
}

} // namespace

std::vector<int> min_height_reducing_set(const Poset& p) {
  if (p.empty()) {
    throw InvalidArgument("height-reducing set needs a nonempty poset");
  }
  const int h = height(p);
  const std::size_t target = cut_of_chains_with(p, h).size();
  // Lexicographically least: greedily accept the smallest element that
  // still extends to a minimum cut.
  std::vector<int> chosen;
  std::vector<int> candidates = maximum_chain_elements(p);
  for (int e : candidates) {
    if (chosen.size() == target) {
      break;
    }
    std::vector<int> trial = chosen;
    trial.push_back(e);
    const Poset rest = p.without(trial);
    const std::size_t remaining = cut_of_chains_with(rest, h).size();
    if (remaining + trial.size() == target) {
      chosen = std::move(trial);
    }
  }
  MONOSEQ_ENSURE(chosen.size() == target, "greedy cut reaches minimum size");
  MONOSEQ_ENSURE(height(p.without(chosen)) < h, "cut lowers the height");
  return chosen;
}

PruneResult prune(const Poset& p, int k, int t) {
  if (!p.witness()) {
    throw InvalidArgument("prune needs an order-dimension-2 witness");
  }
  if (t < 1) {
    throw InvalidArgument("prune needs t >= 1");
  }
  PruneResult out{p, {}};
  Poset& current = out.result;
  for (int round = 1; !current.empty(); ++round) {
    PruneRound record;
    record.round = round;
    bool changed = false;
    const auto cut = min_height_reducing_set(current);
    if (static_cast<int>(cut.size()) <= t) {
      for (int e : cut) {
        record.removed.push_back(current.labels()[e]);
      }
      current = current.without(cut);
      changed = true;
    }
    if (!current.empty() && height(current) < width(current)) {
      current = dual(current);
      record.dualized = true;
      changed = true;
    }
    if (!changed) {
      break;
    }
    record.size_after = current.size();
    record.height_after = height(current);
    record.width_after = current.empty() ? 0 : width(current);
    record.surplus_after = current.size() -
                           static_cast<long long>(record.height_after) * k;
    out.trace.push_back(std::move(record));
  }
  return out;
}

ChainCover disjoint_chain_cover(const Poset& p, int i, int j, int k,
                                bool strict) {
  const Decomposition dec = decompose(p);
  if (i < 1 || j > dec.height || i > j) {
    throw InvalidArgument("levels must satisfy 1 <= i <= j <= height (" +
                          std::to_string(dec.height) + ")");
  }
  ChainCover cover;
  cover.preconditions_hold = true;
  for (int level = i; level <= j; ++level) {
    const int size = static_cast<int>(dec.a_prime[level - 1].size());
    if (size != k) {
      cover.preconditions_hold = false;
      if (strict) {
        throw InvalidArgument("|A'_" + std::to_string(level) + "| = " +
                              std::to_string(size) + ", expected k = " +
                              std::to_string(k));
      }
    }
  }
  for (int y : dec.a_prime[j - 1]) {
    cover.chains.push_back({y});
  }
  for (int level = j - 1; level >= i; --level) {
    const auto& lower = dec.a_prime[level - 1];
    // Left side: current chain bottoms; right side: A' of the level below.
    std::vector<std::vector<int>> adjacency(cover.chains.size());
    for (std::size_t c = 0; c < cover.chains.size(); ++c) {
      const int bottom = cover.chains[c].front();
      for (std::size_t r = 0; r < lower.size(); ++r) {
        if (p.less(lower[r], bottom)) {
          adjacency[c].push_back(static_cast<int>(r));
        }
      }
    }
    const Matching m =
        maximum_matching(adjacency, static_cast<int>(lower.size()));
    std::vector<std::vector<int>> extended;
    for (std::size_t c = 0; c < cover.chains.size(); ++c) {
      if (m.left_to_right[c] >= 0) {
        std::vector<int> chain{lower[m.left_to_right[c]]};
        chain.insert(chain.end(), cover.chains[c].begin(), cover.chains[c].end());
        extended.push_back(std::move(chain));
      }
    }
    cover.chains = std::move(extended);
  }
  std::sort(cover.chains.begin(), cover.chains.end());
  cover.deficiency = k - static_cast<int>(cover.chains.size());
  cover.sigma_low = dec.sigma[i - 1];
  cover.sigma_high = dec.sigma[j - 1];
  cover.sigma_bound_holds =
      cover.sigma_low >= cover.sigma_high + std::max(cover.deficiency, 0);
  if (cover.preconditions_hold) {
    MONOSEQ_ENSURE(cover.sigma_bound_holds, "Sigma_i >= Sigma_j + d");
  }
  return cover;
}

namespace {

struct Components {
  std::vector<std::vector<int>> members;
  bool all_paths = true;
};

// Connected components of a graph given by adjacency lists; records whether
// every component is a path.
Components path_components(const std::vector<std::vector<int>>& adjacency) {
  const int n = static_cast<int>(adjacency.size());
  Components out;
  std::vector<char> seen(n, 0);
  for (int s = 0; s < n; ++s) {
    if (seen[s]) {
      continue;
    }
    std::vector<int> stack{s};
    std::vector<int> members;
    seen[s] = 1;
    std::size_t degree_sum = 0;
    bool small_degree = true;
    while (!stack.empty()) {
      const int v = stack.back();
      stack.pop_back();
      members.push_back(v);
      degree_sum += adjacency[v].size();
      small_degree = small_degree && adjacency[v].size() <= 2;
      for (int w : adjacency[v]) {
        if (!seen[w]) {
          seen[w] = 1;
          stack.push_back(w);
        }
      }
    }
    if (!small_degree || degree_sum / 2 + 1 != members.size()) {
      out.all_paths = false;
    }
    std::sort(members.begin(), members.end());
    out.members.push_back(std::move(members));
  }
  std::sort(out.members.begin(), out.members.end(),
            [](const auto& a, const auto& b) { return a.size() > b.size(); });
  return out;
}

// All chains of exactly `length` elements in `p` with minimum `start`.
std::vector<std::vector<int>> chains_from(const Poset& p, int start, int length) {
  std::vector<std::vector<int>> out;
  std::vector<int> chain{start};
  std::function<void()> grow = [&]() {
    if (static_cast<int>(chain.size()) == length) {
      out.push_back(chain);
      return;
    }
    const int last = chain.back();
    for (int y = 0; y < p.size(); ++y) {
      if (p.less(last, y)) {
        chain.push_back(y);
        grow();
        chain.pop_back();
      }
    }
  };
  grow();
  return out;
}

} // namespace

ExampleReport verify_example_structure(const Poset& p, int k) {
  if (k < 1) {
    throw InvalidArgument("k must be >= 1");
  }
  const long long expected_n = static_cast<long long>(k) * k + k + 1;
  if (p.size() != expected_n) {
    throw InvalidArgument("structure check needs n = k^2+k+1 = " +
                          std::to_string(expected_n) + ", got " +
                          std::to_string(p.size()));
  }
  ExampleReport report;
  report.k = k;
  auto clause = [&](std::string name, bool ok, std::string detail) {
    report.clauses.push_back({name, ok, std::move(detail)});
    if (!ok && report.failed_clause.empty()) {
      report.failed_clause = std::move(name);
    }
    return ok;
  };

  report.chain_count = count_chains_of_size(p, k + 1);
  report.antichain_count = count_antichains_of_size(p, k + 1);

  const Decomposition dec = decompose(p);
  const auto& a1 = dec.levels[0];
  if (!clause("minimal-elements", static_cast<int>(a1.size()) == k + 1,
              "|A_1| = " + std::to_string(a1.size()))) {
    return report;
  }
  std::vector<int> keep;  // rest index -> p index
  for (int x = 0; x < p.size(); ++x) {
    if (dec.level_of[x] != 0) {
      keep.push_back(x);
    }
  }
  const Poset rest = p.induced(keep);
  const int rest_width = width(rest);
  const int rest_height = height(rest);
  clause("remainder-k-chains", rest_width == k,
         "width(P \\ A_1) = " + std::to_string(rest_width));
  clause("remainder-k-antichains", rest_height == k,
         "height(P \\ A_1) = " + std::to_string(rest_height));
  const BigCount rest_chains = count_chains_of_size(rest, k);
  clause("remainder-chain-count", rest_chains == k,
         "k-chains in P \\ A_1 = " + rest_chains.str());

  const auto& a2 = dec.levels.size() > 1 ? dec.levels[1] : std::vector<int>{};
  if (!clause("second-level-size", static_cast<int>(a2.size()) == k,
              "|A_2| = " + std::to_string(a2.size()))) {
    return report;
  }

  // Comparability graph on A_1 u A_2 (local indices: A_1 first).
  std::vector<int> vertices(a1);
  vertices.insert(vertices.end(), a2.begin(), a2.end());
  std::vector<std::vector<int>> adjacency(vertices.size());
  for (std::size_t a = 0; a < vertices.size(); ++a) {
    for (std::size_t b = 0; b < vertices.size(); ++b) {
      if (a != b && p.comparable(vertices[a], vertices[b])) {
        adjacency[a].push_back(static_cast<int>(b));
      }
    }
  }
  const Components comps = path_components(adjacency);
  std::string shape;
  for (const auto& c : comps.members) {
    shape += (shape.empty() ? "" : "+") + std::to_string(c.size());
  }
  const bool case_one = comps.all_paths && comps.members.size() == 1 &&
                        static_cast<int>(comps.members[0].size()) == 2 * k + 1;
  const bool case_two = comps.all_paths && comps.members.size() == 2 &&
                        static_cast<int>(comps.members[0].size()) == 2 * k - 1 &&
                        comps.members[1].size() == 2;
  if (!clause("comparability-graph", case_one || case_two,
              "path components " + shape)) {
    return report;
  }
  report.case_label = case_one ? "i" : "ii";

  if (case_two) {
    const auto& path = comps.members[0];
    const auto& edge = comps.members[1];
    // The A_2 vertex of the lone edge has local index >= |A_1|.
    const int z = vertices[std::max(edge[0], edge[1])];
    const auto z_in_rest = std::lower_bound(keep.begin(), keep.end(), z) - keep.begin();
    const auto chains = chains_from(rest, static_cast<int>(z_in_rest), k);
    bool ok = chains.size() == 1 && k >= 2;
    std::string detail = std::to_string(chains.size()) + " k-chains start at z";
    if (ok) {
      const int second_in_p = keep[chains[0][1]];
      ok = false;
      for (int local : path) {
        if (local < static_cast<int>(a1.size()) &&
            p.less(vertices[local], second_in_p)) {
          ok = true;
        }
      }
      detail += ok ? "; a path element of A_1 lies below its second element"
                   : "; no path element of A_1 lies below its second element";
    }
    clause("case-ii-condition", ok, detail);
  }

  const bool counts_ok =
      case_one ? (report.chain_count == 2 * k && report.antichain_count == 1)
               : (report.chain_count == 2 * k - 1 && report.antichain_count == 2);
  clause("homogenous-counts", counts_ok,
         "chains " + report.chain_count.str() + ", antichains " +
             report.antichain_count.str());
  if (!report.failed_clause.empty()) {
    report.case_label.clear();
  }
  return report;
}

} // namespace monoseq
