// SPDX-FileCopyrightText: (c) 2026 The monoseq authors
//
// SPDX-License-Identifier: Apache-2.0

#include "monoseq/graph.hpp"

#include <algorithm>
#include <limits>
#include <queue>

#include "monoseq/error.hpp"

namespace monoseq {

Matching maximum_matching(const std::vector<std::vector<int>>& adjacency,
                          int right_count) {
  const int left_count = static_cast<int>(adjacency.size());
  constexpr int kInf = std::numeric_limits<int>::max();
  Matching m;
  m.left_to_right.assign(left_count, -1);
  m.right_to_left.assign(right_count, -1);
  std::vector<int> dist(left_count);

  auto bfs = [&]() {
    std::queue<int> queue;
    bool found = false;
    for (int l = 0; l < left_count; ++l) {
      if (m.left_to_right[l] < 0) {
        dist[l] = 0;
        queue.push(l);
      } else {
        dist[l] = kInf;
      }
    }
    while (!queue.empty()) {
      const int l = queue.front();
      queue.pop();
      for (int r : adjacency[l]) {
        const int next = m.right_to_left[r];
        if (next < 0) {
          found = true;
        } else if (dist[next] == kInf) {
          dist[next] = dist[l] + 1;
          queue.push(next);
        }
      }
    }
    return found;
  };

  // Iterative DFS along the BFS layering.
  std::vector<std::size_t> cursor(left_count);
  auto dfs = [&](int root) {
    std::vector<int> stack{root};
    std::vector<int> via;  // right vertex used to descend
    while (!stack.empty()) {
      const int l = stack.back();
      bool advanced = false;
      while (cursor[l] < adjacency[l].size()) {
        const int r = adjacency[l][cursor[l]++];
        const int next = m.right_to_left[r];
        if (next < 0) {
          // Augment along the stack.
          via.push_back(r);
          for (std::size_t i = 0; i < stack.size(); ++i) {
            m.left_to_right[stack[i]] = via[i];
            m.right_to_left[via[i]] = stack[i];
          }
          return true;
        }
        if (dist[next] == dist[l] + 1) {
          via.push_back(r);
          stack.push_back(next);
          advanced = true;
          break;
        }
      }
      if (!advanced) {
        dist[l] = kInf;
        stack.pop_back();
        if (!via.empty()) {
          via.pop_back();
        }
      }
    }
    return false;
  };

  while (bfs()) {
    std::fill(cursor.begin(), cursor.end(), 0);
    for (int l = 0; l < left_count; ++l) {
      if (m.left_to_right[l] < 0 && dfs(l)) {
        ++m.size;
      }
    }
  }
  return m;
}

namespace {

struct FlowEdge {
  int to;
  int capacity;
};

class FlowNetwork {
 public:
  explicit FlowNetwork(int nodes) : adjacency_(nodes) {}

  void add_edge(int from, int to, int capacity) {
    adjacency_[from].push_back(static_cast<int>(edges_.size()));
    edges_.push_back({to, capacity});
    adjacency_[to].push_back(static_cast<int>(edges_.size()));
    edges_.push_back({from, 0});
  }

  int max_flow(int source, int sink) {
    int flow = 0;
    const int nodes = static_cast<int>(adjacency_.size());
    while (true) {
      std::vector<int> parent_edge(nodes, -1);
      std::vector<char> seen(nodes, 0);
      std::queue<int> queue;
      queue.push(source);
      seen[source] = 1;
      while (!queue.empty() && !seen[sink]) {
        const int v = queue.front();
        queue.pop();
        for (int e : adjacency_[v]) {
          const int to = edges_[e].to;
          if (!seen[to] && edges_[e].capacity > 0) {
            seen[to] = 1;
            parent_edge[to] = e;
            queue.push(to);
          }
        }
      }
      if (!seen[sink]) {
        return flow;
      }
      int bottleneck = std::numeric_limits<int>::max();
      for (int v = sink; v != source; v = edges_[parent_edge[v] ^ 1].to) {
        bottleneck = std::min(bottleneck, edges_[parent_edge[v]].capacity);
      }
      for (int v = sink; v != source; v = edges_[parent_edge[v] ^ 1].to) {
        edges_[parent_edge[v]].capacity -= bottleneck;
        edges_[parent_edge[v] ^ 1].capacity += bottleneck;
      }
      flow += bottleneck;
    }
  }

  std::vector<char> residual_reachable(int source) const {
    std::vector<char> seen(adjacency_.size(), 0);
    std::queue<int> queue;
    queue.push(source);
    seen[source] = 1;
    while (!queue.empty()) {
      const int v = queue.front();
      queue.pop();
      for (int e : adjacency_[v]) {
        const int to = edges_[e].to;
        if (!seen[to] && edges_[e].capacity > 0) {
          seen[to] = 1;
          queue.push(to);
        }
      }
    }
    return seen;
  }

 private:
  std::vector<std::vector<int>> adjacency_;
  std::vector<FlowEdge> edges_;
};

} // namespace

std::vector<int> minimum_vertex_cut(const std::vector<std::vector<int>>& out,
                                    const std::vector<int>& sources,
                                    const std::vector<int>& sinks) {
  const int n = static_cast<int>(out.size());
  // v_in = 2v, v_out = 2v+1, super source 2n, super sink 2n+1.
  const int source = 2 * n;
  const int sink = 2 * n + 1;
  const int big = n + 1;
  FlowNetwork network(2 * n + 2);
  for (int v = 0; v < n; ++v) {
    network.add_edge(2 * v, 2 * v + 1, 1);
    for (int w : out[v]) {
      network.add_edge(2 * v + 1, 2 * w, big);
    }
  }
  for (int s : sources) {
    network.add_edge(source, 2 * s, big);
  }
  for (int t : sinks) {
    network.add_edge(2 * t + 1, sink, big);
  }
  const int flow = network.max_flow(source, sink);
  const auto reach = network.residual_reachable(source);
  std::vector<int> cut;
  for (int v = 0; v < n; ++v) {
    if (reach[2 * v] && !reach[2 * v + 1]) {
      cut.push_back(v);
    }
  }
  MONOSEQ_ENSURE(static_cast<int>(cut.size()) == flow, "cut size equals max flow");
  return cut;
}

} // namespace monoseq
