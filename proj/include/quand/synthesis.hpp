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
#include <ostream>
#include <utility>
#include <vector>

#include "quand/circuit.hpp"
#include "quand/graph.hpp"

namespace quand {

// One embedded AND step: the parent wire keeps child AND parent while the
// child wire stores the leftover information across |0>,|1>,|2>.
struct QuandBlock {
  int child;
  int parent;
  double theta;
};

// Forward-ordered embedding plan plus its layered schedule. Recovery is
// always the exact reverse of `embed` with theta shifted by pi, so it is not
// stored separately. Layers are 1-based; blocks sharing a layer act on
// disjoint wire pairs, and a parent consumes its children one layer at a
// time in ascending child order.
struct SynthesisPlan {
  std::pair<int, int> root_edge{};
  std::vector<int> parent;        // -1 for roots and non-embedded wires
  std::vector<int> vertex_depth;  // tree depth, 0 at roots
  std::vector<int> side;          // tree membership (0/1)
  std::vector<QuandBlock> embed;
  std::vector<int> embed_layer;
  int embed_depth = 0;
  int tree_height = 0;
};

struct Synthesis {
  Circuit circuit;
  SynthesisPlan plan;
};

// QuAND: X on the child, then SWAP_{11-20}(theta) on (child, parent). On
// computational inputs |A,B> the parent comes out as |A AND B| and the child
// as 1,2,0,0 for inputs 00,01,10,11.
std::vector<Op> quand_ops(int child, int parent, double theta);
// Exact inverse: SWAP_{11-20}(theta + pi) on (child, parent), then X on the
// child. The pi shift cancels the swap phases so quand followed by
// reverse_quand is the identity including phases.
std::vector<Op> reverse_quand_ops(int child, int parent, double theta);

// n-wire CZ on a 1-D chain split at wire k (1-based, roots k and k+1;
// default ceil(n/2)). Exactly 2n-3 multi-wire gates.
Synthesis synth_mcz_chain(int n, std::optional<int> split = std::nullopt);

// n-wire CZ over arbitrary connectivity via a two-tree embedding; the central
// CZ acts on the root edge. Same 2n-3 multi-wire gate count.
Synthesis synth_mcz_tree(
    const ConnectivityGraph& graph,
    std::optional<std::pair<int, int>> root_override = std::nullopt);

enum class TargetUnitary { Z, X, Swap };

// Multiply controlled U: all controls are embedded onto a single root
// adjacent to the target region, the controlled-U fires from that root, and
// the embedding is recovered. Z and X take one target; Swap takes two and
// reduces to the Fredkin construction.
Synthesis synth_mcu(const ConnectivityGraph& graph,
                    const std::vector<int>& controls, TargetUnitary u,
                    const std::vector<int>& targets);

// Generalized Toffoli: H on the target around an n-wire CZ over all wires.
Synthesis synth_toffoli(const ConnectivityGraph& graph, int target);

// Generalized Fredkin (controlled-SWAP) on an adjacent target pair:
// CNOT(t2 -> t1), generalized Toffoli onto t2, CNOT(t2 -> t1).
Synthesis synth_fredkin(const ConnectivityGraph& graph,
                        std::pair<int, int> targets);

// Wire dimensions implied by a plan: every child gets dim 3, all else dim 2.
std::vector<int> plan_dims(int n, const SynthesisPlan& plan);
// The bare embedded-CZ gate sequence (embedding, root CZ, recovery) used by
// both the synthesizers and the Grover builders.
std::vector<Op> mcz_ops(const SynthesisPlan& plan);

void write_plan_sidecar(std::ostream& out, const Synthesis& synthesis);

}  // namespace quand
