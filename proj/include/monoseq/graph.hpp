// SPDX-FileCopyrightText: (c) 2026 The monoseq authors
//
// SPDX-License-Identifier: Apache-2.0

#pragma once

#include <vector>

namespace monoseq {

/// Maximum bipartite matching (Hopcroft-Karp). `adjacency[l]` lists the
/// right vertices adjacent to left vertex l.
struct Matching {
  int size = 0;
  std::vector<int> left_to_right;  // -1 when unmatched
  std::vector<int> right_to_left;
};

Matching maximum_matching(const std::vector<std::vector<int>>& adjacency,
                          int right_count);

/// Unit-capacity vertex cut between `sources` and `sinks` in a DAG given by
/// out-adjacency. Vertices are split into in/out halves; returns a minimum
/// set of vertices meeting every source-to-sink path. Sources and sinks are
/// themselves cuttable.
std::vector<int> minimum_vertex_cut(const std::vector<std::vector<int>>& out,
                                    const std::vector<int>& sources,
                                    const std::vector<int>& sinks);

} // namespace monoseq
