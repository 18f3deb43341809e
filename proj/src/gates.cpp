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

#include "quand/gates.hpp"

#include <stdexcept>

namespace quand {

const char* gate_name(GateKind kind) {
  switch (kind) {
    case GateKind::X:
      return "X";
    case GateKind::H:
      return "H";
    case GateKind::RY:
      return "RY";
    case GateKind::Phase:
      return "PHASE";
    case GateKind::CZ:
      return "CZ";
    case GateKind::CNOT:
      return "CNOT";
    case GateKind::Swap1120:
      return "SWAP1120";
    case GateKind::RefMcx:
      return "REF_MCX";
    case GateKind::RefMcz:
      return "REF_MCZ";
  }
  throw std::logic_error("gate_name: unknown kind");
}

GateKind gate_from_name(const std::string& name) {
  if (name == "X") return GateKind::X;
  if (name == "H") return GateKind::H;
  if (name == "RY") return GateKind::RY;
  if (name == "PHASE") return GateKind::Phase;
  if (name == "CZ") return GateKind::CZ;
  if (name == "CNOT") return GateKind::CNOT;
  if (name == "SWAP1120") return GateKind::Swap1120;
  if (name == "REF_MCX") return GateKind::RefMcx;
  if (name == "REF_MCZ") return GateKind::RefMcz;
  throw std::invalid_argument("unknown gate name: " + name);
}

bool is_ref_gate(GateKind kind) {
  return kind == GateKind::RefMcx || kind == GateKind::RefMcz;
}

bool is_single_wire(GateKind kind) {
  switch (kind) {
    case GateKind::X:
    case GateKind::H:
    case GateKind::RY:
    case GateKind::Phase:
      return true;
    default:
      return false;
  }
}

}  // namespace quand
