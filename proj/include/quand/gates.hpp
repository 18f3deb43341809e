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

#include <string>
#include <vector>

namespace quand {

// Native gate alphabet. Single-wire gates act on the {|0>,|1>} subspace of
// their wire and leave |2> untouched, except PHASE which addresses one level
// explicitly. SWAP1120 exchanges |1,1> and |2,0> on a (child, parent) pair,
// with drive phase theta on the off-diagonal elements. The two REF_ gates are
// reference primitives for oracles and equivalence checks only; they are never
// allowed in circuits labeled as synthesized.
enum class GateKind {
  X,
  H,
  RY,
  Phase,
  CZ,
  CNOT,
  Swap1120,
  RefMcx,
  RefMcz,
};

const char* gate_name(GateKind kind);
GateKind gate_from_name(const std::string& name);

bool is_ref_gate(GateKind kind);
bool is_single_wire(GateKind kind);

struct Op {
  GateKind kind;
  std::vector<int> wires;
  double theta = 0.0;  // SWAP1120 drive phase
  double angle = 0.0;  // RY / PHASE rotation angle
  int level = 0;       // PHASE target level

  bool operator==(const Op&) const = default;
};

}  // namespace quand
