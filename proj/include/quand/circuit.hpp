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

#include <cstddef>
#include <map>
#include <vector>

#include "quand/gates.hpp"

namespace quand {

// Wires are indexed contiguously from 0; each carries its own dimension
// (2 for a plain qubit, 3 when the ancilla level |2> is in play).
struct Wire {
  int id;
  int dim;

  bool operator==(const Wire&) const = default;
};

enum class CircuitLabel { Synthesized, Reference };

enum class DepthMode { AllGates, MultiWireOnly };

struct GateCounts {
  std::size_t multi_wire = 0;
  std::size_t single_wire = 0;
  std::map<GateKind, std::size_t> by_kind;
};

// Ordered gate sequence over a fixed register. Construction-time appends are
// validated (arity, wire range, per-gate dimension constraints); once built,
// circuits behave as plain values and can be shared freely.
class Circuit {
 public:
  Circuit() = default;
  static Circuit make(const std::vector<int>& dims,
                      CircuitLabel label = CircuitLabel::Synthesized);

  Circuit& push(GateKind kind, std::vector<int> wires, double theta = 0.0,
                double angle = 0.0, int level = 0);
  Circuit& push(const Op& op);
  Circuit& extend(const std::vector<Op>& ops);

  Circuit& x(int wire);
  Circuit& h(int wire);
  Circuit& ry(int wire, double angle);
  Circuit& phase(int wire, int level, double angle);
  Circuit& cz(int a, int b);
  Circuit& cnot(int control, int target);
  Circuit& swap1120(int child, int parent, double theta);
  Circuit& ref_mcx(std::vector<int> controls, int target);
  Circuit& ref_mcz(std::vector<int> wires);

  // Records a macro-gate boundary at the current end of the op list. The
  // stochastic noise channel attaches one fidelity draw per recorded macro.
  Circuit& mark_macro();

  const std::vector<Wire>& wires() const { return wires_; }
  const std::vector<int>& dims() const { return dims_; }
  const std::vector<Op>& ops() const { return ops_; }
  CircuitLabel label() const { return label_; }
  const std::vector<std::size_t>& macro_boundaries() const { return macros_; }
  std::size_t wire_count() const { return dims_.size(); }

  std::size_t depth(DepthMode mode = DepthMode::AllGates) const;
  GateCounts gate_count() const;

  bool operator==(const Circuit&) const = default;

 private:
  std::vector<Wire> wires_;
  std::vector<int> dims_;
  std::vector<Op> ops_;
  std::vector<std::size_t> macros_;
  CircuitLabel label_ = CircuitLabel::Synthesized;
};

// Greedy as-soon-as-possible layering: returns layers of op indices such that
// wire supports within a layer are pairwise disjoint and per-wire op order is
// preserved. MultiWireOnly drops single-wire ops before layering.
std::vector<std::vector<std::size_t>> layering(const Circuit& circuit,
                                               DepthMode mode);

}  // namespace quand
