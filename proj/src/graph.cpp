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

#include "quand/graph.hpp"

#include <algorithm>
#include <deque>
#include <stdexcept>
#include <string>

namespace quand {

ConnectivityGraph ConnectivityGraph::make(
    int n, std::vector<std::pair<int, int>> edges) {
  if (n <= 0) throw std::invalid_argument("graph: vertex count must be > 0");
  ConnectivityGraph g;
  g.n_ = n;
  for (auto& [u, v] : edges) {
    if (u == v)
      throw std::invalid_argument("graph: self-loop at " + std::to_string(u));
    if (u < 0 || v < 0 || u >= n || v >= n)
      throw std::invalid_argument("graph: edge (" + std::to_string(u) + "," +
                                  std::to_string(v) + ") out of range");
    if (u > v) std::swap(u, v);
  }
  std::sort(edges.begin(), edges.end());
  edges.erase(std::unique(edges.begin(), edges.end()), edges.end());
  g.edges_ = std::move(edges);
  g.adj_.assign(n, {});
  for (auto [u, v] : g.edges_) {
    g.adj_[u].push_back(v);
    g.adj_[v].push_back(u);
  }
  for (auto& nbrs : g.adj_) std::sort(nbrs.begin(), nbrs.end());
  return g;
}

ConnectivityGraph ConnectivityGraph::path(int n) {
  std::vector<std::pair<int, int>> edges;
  for (int i = 0; i + 1 < n; ++i) edges.emplace_back(i, i + 1);
  return make(n, std::move(edges));
}

ConnectivityGraph ConnectivityGraph::cycle(int n) {
  if (n < 3) throw std::invalid_argument("cycle: need at least 3 vertices");
  std::vector<std::pair<int, int>> edges;
  for (int i = 0; i < n; ++i) edges.emplace_back(i, (i + 1) % n);
  return make(n, std::move(edges));
}

ConnectivityGraph ConnectivityGraph::grid(int rows, int cols) {
  std::vector<std::pair<int, int>> edges;
  auto id = [cols](int r, int c) { return r * cols + c; };
  for (int r = 0; r < rows; ++r)
    for (int c = 0; c < cols; ++c) {
      if (c + 1 < cols) edges.emplace_back(id(r, c), id(r, c + 1));
      if (r + 1 < rows) edges.emplace_back(id(r, c), id(r + 1, c));
    }
  return make(rows * cols, std::move(edges));
}

ConnectivityGraph ConnectivityGraph::complete(int n) {
  std::vector<std::pair<int, int>> edges;
  for (int u = 0; u < n; ++u)
    for (int v = u + 1; v < n; ++v) edges.emplace_back(u, v);
  return make(n, std::move(edges));
}

bool ConnectivityGraph::has_edge(int u, int v) const {
  if (u > v) std::swap(u, v);
  return std::binary_search(edges_.begin(), edges_.end(), std::make_pair(u, v));
}

std::vector<int> ConnectivityGraph::bfs_depths(int source) const {
  std::vector<int> dist(n_, -1);
  std::deque<int> queue{source};
  dist[source] = 0;
  while (!queue.empty()) {
    int u = queue.front();
    queue.pop_front();
    for (int v : adj_[u])
      if (dist[v] < 0) {
        dist[v] = dist[u] + 1;
        queue.push_back(v);
      }
  }
  return dist;
}

bool ConnectivityGraph::connected() const {
  auto dist = bfs_depths(0);
  return std::all_of(dist.begin(), dist.end(), [](int d) { return d >= 0; });
}

int BranchingTree::height() const {
  int h = 0;
  for (int d : depth) h = std::max(h, d);
  return h;
}

namespace {

// Assigns every vertex to the nearer root of (u, v); ties go to the
// lower-index root. Parent = lowest-index same-side neighbor one layer up.
BranchingTree assign_tree(const ConnectivityGraph& graph, int u, int v) {
  const int n = graph.vertex_count();
  const auto du = graph.bfs_depths(u);
  const auto dv = graph.bfs_depths(v);
  BranchingTree tree;
  tree.root_edge = {u, v};
  tree.parent.assign(n, -1);
  tree.depth.assign(n, 0);
  tree.side.assign(n, 0);
  tree.children.assign(n, {});
  const int low_root = std::min(u, v);
  for (int w = 0; w < n; ++w) {
    if (w == u || w == v) {
      tree.side[w] = (w == u) ? 0 : 1;
      continue;
    }
    if (du[w] < dv[w])
      tree.side[w] = 0;
    else if (dv[w] < du[w])
      tree.side[w] = 1;
    else
      tree.side[w] = (low_root == u) ? 0 : 1;
    tree.depth[w] = std::min(du[w], dv[w]);
  }
  for (int w = 0; w < n; ++w) {
    if (w == u || w == v) continue;
    int best = -1;
    for (int nb : graph.adjacency()[w]) {
      if (tree.side[nb] != tree.side[w]) continue;
      if (tree.depth[nb] != tree.depth[w] - 1) continue;
      best = nb;
      break;  // adjacency is sorted ascending
    }
    if (best < 0)
      throw std::logic_error("branching tree: no same-side parent for vertex " +
                             std::to_string(w));
    tree.parent[w] = best;
    tree.children[best].push_back(w);
  }
  return tree;
}

int max_side_height(const BranchingTree& tree) {
  int h = 0;
  for (std::size_t w = 0; w < tree.depth.size(); ++w)
    h = std::max(h, tree.depth[w]);
  return h;
}

}  // namespace

BranchingTree build_branching_tree(
    const ConnectivityGraph& graph,
    std::optional<std::pair<int, int>> root_override) {
  if (graph.vertex_count() < 2)
    throw std::invalid_argument("branching tree: need at least 2 vertices");
  if (!graph.connected())
    throw std::invalid_argument("branching tree: graph is disconnected");
  if (root_override) {
    auto [u, v] = *root_override;
    if (!graph.has_edge(u, v))
      throw std::invalid_argument("branching tree: root edge (" +
                                  std::to_string(u) + "," + std::to_string(v) +
                                  ") is not a graph edge");
    return assign_tree(graph, u, v);
  }
  BranchingTree best;
  int best_height = -1;
  for (auto [u, v] : graph.edges()) {
    BranchingTree candidate = assign_tree(graph, u, v);
    int h = max_side_height(candidate);
    if (best_height < 0 || h < best_height) {
      best = std::move(candidate);
      best_height = h;
    }
  }
  return best;
}

}  // namespace quand
