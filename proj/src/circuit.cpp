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

#include "quand/circuit.hpp"

#include <algorithm>
#include <set>
#include <stdexcept>
#include <string>

namespace quand {

namespace {

void check_arity(const Op& op) {
  const std::size_t n = op.wires.size();
  switch (op.kind) {
    case GateKind::X:
    case GateKind::H:
    case GateKind::RY:
    case GateKind::Phase:
      if (n != 1)
        throw std::invalid_argument(std::string(gate_name(op.kind)) +
                                    ": expected 1 wire, got " +
                                    std::to_string(n));
      break;
    case GateKind::CZ:
    case GateKind::CNOT:
    case GateKind::Swap1120:
      if (n != 2)
        throw std::invalid_argument(std::string(gate_name(op.kind)) +
                                    ": expected 2 wires, got " +
                                    std::to_string(n));
      break;
    case GateKind::RefMcx:
    case GateKind::RefMcz:
      if (n < 2)
        throw std::invalid_argument(std::string(gate_name(op.kind)) +
                                    ": expected at least 2 wires, got " +
                                    std::to_string(n));
      break;
  }
}

}  // namespace

Circuit Circuit::make(const std::vector<int>& dims, CircuitLabel label) {
  if (dims.empty()) throw std::invalid_argument("circuit: empty register");
  Circuit c;
  c.label_ = label;
  c.dims_ = dims;
  c.wires_.reserve(dims.size());
  for (std::size_t i = 0; i < dims.size(); ++i) {
    if (dims[i] != 2 && dims[i] != 3)
      throw std::invalid_argument("wire " + std::to_string(i) + ": dim " +
                                  std::to_string(dims[i]) + " unsupported");
    c.wires_.push_back(Wire{static_cast<int>(i), dims[i]});
  }
  return c;
}

Circuit& Circuit::push(const Op& op) {
  check_arity(op);
  std::set<int> seen;
  for (int w : op.wires) {
    if (w < 0 || static_cast<std::size_t>(w) >= dims_.size())
      throw std::invalid_argument("wire " + std::to_string(w) +
                                  " out of range");
    if (!seen.insert(w).second)
      throw std::invalid_argument("duplicate wire " + std::to_string(w));
  }
  if (op.kind == GateKind::Swap1120 && dims_[op.wires[0]] != 3)
    throw std::invalid_argument("SWAP1120: child wire " +
                                std::to_string(op.wires[0]) + " must have dim 3");
  if (op.kind == GateKind::Phase &&
      (op.level < 0 || op.level >= dims_[op.wires[0]]))
    throw std::invalid_argument("PHASE: level " + std::to_string(op.level) +
                                " outside wire dim");
  if (is_ref_gate(op.kind) && label_ == CircuitLabel::Synthesized)
    throw std::invalid_argument(
        std::string(gate_name(op.kind)) +
        " is a reference primitive; not allowed in a synthesized circuit");
  ops_.push_back(op);
  return *this;
}

Circuit& Circuit::push(GateKind kind, std::vector<int> wires, double theta,
                       double angle, int level) {
  Op op;
  op.kind = kind;
  op.wires = std::move(wires);
  op.theta = theta;
  op.angle = angle;
  op.level = level;
  return push(op);
}

Circuit& Circuit::extend(const std::vector<Op>& ops) {
  for (const Op& op : ops) push(op);
  return *this;
}

Circuit& Circuit::x(int wire) { return push(GateKind::X, {wire}); }
Circuit& Circuit::h(int wire) { return push(GateKind::H, {wire}); }
Circuit& Circuit::ry(int wire, double angle) {
  return push(GateKind::RY, {wire}, 0.0, angle);
}
Circuit& Circuit::phase(int wire, int level, double angle) {
  return push(GateKind::Phase, {wire}, 0.0, angle, level);
}
Circuit& Circuit::cz(int a, int b) { return push(GateKind::CZ, {a, b}); }
Circuit& Circuit::cnot(int control, int target) {
  return push(GateKind::CNOT, {control, target});
}
Circuit& Circuit::swap1120(int child, int parent, double theta) {
  return push(GateKind::Swap1120, {child, parent}, theta);
}
Circuit& Circuit::ref_mcx(std::vector<int> controls, int target) {
  controls.push_back(target);
  return push(GateKind::RefMcx, std::move(controls));
}
Circuit& Circuit::ref_mcz(std::vector<int> wires) {
  return push(GateKind::RefMcz, std::move(wires));
}

Circuit& Circuit::mark_macro() {
  macros_.push_back(ops_.size());
  return *this;
}

std::vector<std::vector<std::size_t>> layering(const Circuit& circuit,
                                               DepthMode mode) {
  std::vector<std::size_t> wire_layer(circuit.wire_count(), 0);
  std::vector<std::vector<std::size_t>> layers;
  for (std::size_t i = 0; i < circuit.ops().size(); ++i) {
    const Op& op = circuit.ops()[i];
    if (mode == DepthMode::MultiWireOnly && op.wires.size() < 2) continue;
    std::size_t layer = 0;
    for (int w : op.wires) layer = std::max(layer, wire_layer[w]);
    ++layer;
    for (int w : op.wires) wire_layer[w] = layer;
    if (layer > layers.size()) layers.resize(layer);
    layers[layer - 1].push_back(i);
  }
  return layers;
}

std::size_t Circuit::depth(DepthMode mode) const {
  return layering(*this, mode).size();
}

GateCounts Circuit::gate_count() const {
  GateCounts counts;
  for (const Op& op : ops_) {
    if (op.wires.size() >= 2)
      ++counts.multi_wire;
    else
      ++counts.single_wire;
    ++counts.by_kind[op.kind];
  }
  return counts;
}

}  // namespace quand
