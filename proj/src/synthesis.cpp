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

#include "quand/synthesis.hpp"

#include <algorithm>
#include <numbers>
#include <stdexcept>
#include <string>

namespace quand {

namespace {

// Layers the embedding: a wire's own QuAND fires only after all of its
// children were consumed, and a parent takes one child per layer in
// ascending index order. Returns the layer at which vertex v is fully
// embedded (0 for leaves).
int schedule_vertex(const std::vector<std::vector<int>>& children, int v,
                    std::vector<int>& layer) {
  int prev = 0;
  for (int c : children[v]) {
    const int ready = schedule_vertex(children, c, layer);
    layer[c] = std::max(ready, prev) + 1;
    prev = layer[c];
  }
  return prev;
}

// Embeds one rooted tree into the plan: QuANDs sorted by (layer, child).
void emit_embedding(const std::vector<std::vector<int>>& children,
                    const std::vector<int>& parent,
                    const std::vector<int>& roots, SynthesisPlan& plan) {
  std::vector<int> layer(children.size(), 0);
  for (int r : roots) schedule_vertex(children, r, layer);
  std::vector<int> embedded;
  for (std::size_t v = 0; v < children.size(); ++v)
    if (parent[v] >= 0) embedded.push_back(static_cast<int>(v));
  std::sort(embedded.begin(), embedded.end(), [&](int a, int b) {
    if (layer[a] != layer[b]) return layer[a] < layer[b];
    return a < b;
  });
  for (int v : embedded) {
    plan.embed.push_back(QuandBlock{v, parent[v], 0.0});
    plan.embed_layer.push_back(layer[v]);
    plan.embed_depth = std::max(plan.embed_depth, layer[v]);
  }
}

SynthesisPlan plan_from_tree(const BranchingTree& tree) {
  SynthesisPlan plan;
  plan.root_edge = tree.root_edge;
  plan.parent = tree.parent;
  plan.vertex_depth = tree.depth;
  plan.side = tree.side;
  plan.tree_height = tree.height();
  emit_embedding(tree.children, tree.parent,
                 {tree.root_edge.first, tree.root_edge.second}, plan);
  return plan;
}

Circuit circuit_from_plan(int n, const SynthesisPlan& plan) {
  Circuit circuit = Circuit::make(plan_dims(n, plan));
  circuit.extend(mcz_ops(plan));
  circuit.mark_macro();
  return circuit;
}

}  // namespace

std::vector<Op> quand_ops(int child, int parent, double theta) {
  if (child == parent) throw std::invalid_argument("quand: child == parent");
  return {Op{GateKind::X, {child}},
          Op{GateKind::Swap1120, {child, parent}, theta}};
}

std::vector<Op> reverse_quand_ops(int child, int parent, double theta) {
  if (child == parent)
    throw std::invalid_argument("reverse_quand: child == parent");
  return {Op{GateKind::Swap1120, {child, parent}, theta + std::numbers::pi},
          Op{GateKind::X, {child}}};
}

std::vector<int> plan_dims(int n, const SynthesisPlan& plan) {
  std::vector<int> dims(n, 2);
  for (const QuandBlock& block : plan.embed) dims[block.child] = 3;
  return dims;
}

std::vector<Op> mcz_ops(const SynthesisPlan& plan) {
  std::vector<Op> ops;
  for (const QuandBlock& block : plan.embed)
    for (const Op& op : quand_ops(block.child, block.parent, block.theta))
      ops.push_back(op);
  ops.push_back(Op{GateKind::CZ, {plan.root_edge.first, plan.root_edge.second}});
  for (auto it = plan.embed.rbegin(); it != plan.embed.rend(); ++it)
    for (const Op& op : reverse_quand_ops(it->child, it->parent, it->theta))
      ops.push_back(op);
  return ops;
}

Synthesis synth_mcz_chain(int n, std::optional<int> split) {
  if (n < 2) throw std::invalid_argument("mcz chain: need n >= 2");
  const int k = split.value_or((n + 1) / 2);
  if (k < 1 || k >= n)
    throw std::invalid_argument("mcz chain: split must satisfy 1 <= k < n");
  const BranchingTree tree =
      build_branching_tree(ConnectivityGraph::path(n), std::pair{k - 1, k});
  SynthesisPlan plan = plan_from_tree(tree);
  return Synthesis{circuit_from_plan(n, plan), std::move(plan)};
}

Synthesis synth_mcz_tree(const ConnectivityGraph& graph,
                         std::optional<std::pair<int, int>> root_override) {
  const BranchingTree tree = build_branching_tree(graph, root_override);
  SynthesisPlan plan = plan_from_tree(tree);
  return Synthesis{circuit_from_plan(graph.vertex_count(), plan),
                   std::move(plan)};
}

Synthesis synth_toffoli(const ConnectivityGraph& graph, int target) {
  if (target < 0 || target >= graph.vertex_count())
    throw std::invalid_argument("toffoli: target out of range");
  Synthesis mcz = synth_mcz_tree(graph);
  Circuit circuit = Circuit::make(mcz.circuit.dims());
  circuit.h(target);
  circuit.extend(mcz.circuit.ops());
  circuit.mark_macro();
  circuit.h(target);
  return Synthesis{std::move(circuit), std::move(mcz.plan)};
}

Synthesis synth_fredkin(const ConnectivityGraph& graph,
                        std::pair<int, int> targets) {
  const auto [t1, t2] = targets;
  if (t1 == t2) throw std::invalid_argument("fredkin: identical targets");
  if (!graph.has_edge(t1, t2))
    throw std::invalid_argument("fredkin: target pair must be adjacent");
  Synthesis mcz = synth_mcz_tree(graph);
  Circuit circuit = Circuit::make(mcz.circuit.dims());
  circuit.cnot(t2, t1);
  circuit.h(t2);
  circuit.extend(mcz.circuit.ops());
  circuit.mark_macro();
  circuit.h(t2);
  circuit.cnot(t2, t1);
  return Synthesis{std::move(circuit), std::move(mcz.plan)};
}

Synthesis synth_mcu(const ConnectivityGraph& graph,
                    const std::vector<int>& controls, TargetUnitary u,
                    const std::vector<int>& targets) {
  const int n = graph.vertex_count();
  if (controls.empty()) throw std::invalid_argument("mcu: no controls");
  std::vector<bool> is_control(n, false), is_target(n, false);
  for (int c : controls) {
    if (c < 0 || c >= n) throw std::invalid_argument("mcu: control out of range");
    is_control[c] = true;
  }
  for (int t : targets) {
    if (t < 0 || t >= n) throw std::invalid_argument("mcu: target out of range");
    if (is_control[t])
      throw std::invalid_argument("mcu: target overlaps controls");
    is_target[t] = true;
  }
  if (controls.size() + targets.size() != static_cast<std::size_t>(n))
    throw std::invalid_argument("mcu: controls and targets must cover the graph");

  if (u == TargetUnitary::Swap) {
    if (targets.size() != 2)
      throw std::invalid_argument("mcu: SWAP takes two targets");
    return synth_fredkin(graph, {targets[0], targets[1]});
  }
  if (targets.size() != 1)
    throw std::invalid_argument("mcu: Z/X take one target");
  const int target = targets[0];

  // Root candidates: controls adjacent to the target. For each, BFS over the
  // control-induced subgraph; keep the shallowest tree (ties to the lowest
  // candidate index).
  std::vector<int> best_parent, best_depth;
  int best_root = -1, best_height = -1;
  for (int root : graph.adjacency()[target]) {
    if (!is_control[root]) continue;
    std::vector<int> parent(n, -1), depth(n, -1);
    std::vector<int> frontier{root};
    depth[root] = 0;
    while (!frontier.empty()) {
      std::vector<int> next;
      for (int v : frontier)
        for (int nb : graph.adjacency()[v])
          if (is_control[nb] && depth[nb] < 0) {
            depth[nb] = depth[v] + 1;
            parent[nb] = v;
            next.push_back(nb);
          }
      frontier = std::move(next);
    }
    int height = 0;
    bool covers = true;
    for (int c : controls) {
      if (depth[c] < 0) covers = false;
      height = std::max(height, depth[c]);
    }
    if (!covers) continue;
    if (best_root < 0 || height < best_height) {
      best_root = root;
      best_height = height;
      best_parent = std::move(parent);
      best_depth = std::move(depth);
    }
  }
  if (best_root < 0)
    throw std::invalid_argument(
        "mcu: connectivity cannot reach the target from a spanning control tree");

  SynthesisPlan plan;
  plan.root_edge = {best_root, target};
  plan.parent = best_parent;
  plan.vertex_depth.assign(n, 0);
  plan.side.assign(n, 0);
  for (int c : controls) plan.vertex_depth[c] = best_depth[c];
  for (int t : targets) plan.side[t] = 1;
  plan.tree_height = best_height;
  std::vector<std::vector<int>> children(n);
  for (int v = 0; v < n; ++v)
    if (plan.parent[v] >= 0) children[plan.parent[v]].push_back(v);
  for (auto& kids : children) std::sort(kids.begin(), kids.end());
  emit_embedding(children, plan.parent, {best_root}, plan);

  Circuit circuit = Circuit::make(plan_dims(n, plan));
  for (const QuandBlock& block : plan.embed)
    circuit.extend(quand_ops(block.child, block.parent, block.theta));
  if (u == TargetUnitary::Z)
    circuit.cz(best_root, target);
  else
    circuit.cnot(best_root, target);
  for (auto it = plan.embed.rbegin(); it != plan.embed.rend(); ++it)
    circuit.extend(reverse_quand_ops(it->child, it->parent, it->theta));
  circuit.mark_macro();
  return Synthesis{std::move(circuit), std::move(plan)};
}

void write_plan_sidecar(std::ostream& out, const Synthesis& synthesis) {
  const SynthesisPlan& plan = synthesis.plan;
  const Circuit& circuit = synthesis.circuit;
  out << "# synthesis plan\n";
  out << "# root edge: " << plan.root_edge.first << " " << plan.root_edge.second
      << "\n";
  out << "# vertex\tparent\tdepth\tside\n";
  for (std::size_t v = 0; v < plan.parent.size(); ++v)
    out << v << "\t" << plan.parent[v] << "\t" << plan.vertex_depth[v] << "\t"
        << plan.side[v] << "\n";
  out << "# embed order (child -> parent @ layer)\n";
  for (std::size_t i = 0; i < plan.embed.size(); ++i)
    out << plan.embed[i].child << " -> " << plan.embed[i].parent << " @ "
        << plan.embed_layer[i] << "\n";
  const GateCounts counts = circuit.gate_count();
  out << "# stats: gates=" << counts.multi_wire
      << " depth=" << circuit.depth(DepthMode::MultiWireOnly)
      << " embed_layers=" << plan.embed_depth
      << " tree_height=" << plan.tree_height
      << " single_wire=" << counts.single_wire << "\n";
}

}  // namespace quand
