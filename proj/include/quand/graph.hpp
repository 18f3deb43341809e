// Copyright 2026 The quandc authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#pragma once

#include <optional>
#include <utility>
#include <vector>

namespace quand {

// Undirected coupling graph. Edges are stored normalized (u < v), sorted and
// de-duplicated; self-loops are rejected.
class ConnectivityGraph {
 public:
  static ConnectivityGraph make(int n, std::vector<std::pair<int, int>> edges);
  static ConnectivityGraph path(int n);
  static ConnectivityGraph cycle(int n);
  static ConnectivityGraph grid(int rows, int cols);
  static ConnectivityGraph complete(int n);

  int vertex_count() const { return n_; }
  const std::vector<std::pair<int, int>>& edges() const { return edges_; }
  const std::vector<std::vector<int>>& adjacency() const { return adj_; }
  bool has_edge(int u, int v) const;
  bool connected() const;

  // BFS distance from `source` to every vertex (-1 if unreachable).
  std::vector<int> bfs_depths(int source) const;

 private:
  int n_ = 0;
  std::vector<std::pair<int, int>> edges_;
  std::vector<std::vector<int>> adj_;
};

// Two-tree spanning forest rooted at the endpoints of a designated root edge.
// Vertex v belongs to side 0 (rooted at root_edge.first) or side 1; the two
// roots have parent -1 and depth 0.
struct BranchingTree {
  std::pair<int, int> root_edge{};
  std::vector<int> parent;
  std::vector<int> depth;
  std::vector<int> side;
  std::vector<std::vector<int>> children;  // ascending per parent

  int height() const;
};

// Selects the root edge minimizing the larger of the two BFS-tree heights
// (ties broken by smallest (u, v) lexicographically) unless an override is
// given, then assigns every other vertex to the nearer root (ties to the
// lower-index root) with parent = lowest-index neighbor in the previous
// layer on the same side. Throws on disconnected input.
BranchingTree build_branching_tree(
    const ConnectivityGraph& graph,
    std::optional<std::pair<int, int>> root_override = std::nullopt);

}  // namespace quand
