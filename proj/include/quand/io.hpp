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

#include "quand/analysis.hpp"
#include "quand/circuit.hpp"
#include "quand/graph.hpp"
#include "quand/statevector.hpp"

namespace quand {

// Circuit files are structured-object text:
//   {"wires": [{"id": 0, "dim": 2}, ...],
//    "ops":   [{"gate": "SWAP1120", "wires": [0, 1], "theta": 0.0}, ...],
//    "label": "synthesized" | "reference",
//    "macros": [..]}                       // optional macro boundaries
// Gate names are exactly X, H, RY, PHASE, CZ, CNOT, SWAP1120, REF_MCX,
// REF_MCZ; RY and PHASE carry "angle", PHASE also "level". Wire 0 is the
// most significant digit of basis-state labels.
std::string circuit_to_text(const Circuit& circuit);
Circuit circuit_from_text(const std::string& text);

void write_circuit_file(const std::string& path, const Circuit& circuit);
Circuit read_circuit_file(const std::string& path);

// Graph files: one "u v" edge per line; '#' starts a comment; the vertex
// count is one past the largest id mentioned.
ConnectivityGraph graph_from_text(const std::string& text);
ConnectivityGraph read_graph_file(const std::string& path);

std::string read_text_file(const std::string& path);
void write_text_file(const std::string& path, const std::string& text);

// Tab-separated truth table: one row per binary input with the output
// distribution and the trailing leakage column. The header names the basis
// ordering convention.
std::string truth_table_to_tsv(const TruthTable& table);

// Confusion matrices share the circuit files' structured-object syntax:
//   {"r": [[...], ...]}   with column = prepared state, row = measured state.
ConfusionMatrix confusion_from_text(const std::string& text);
ConfusionMatrix read_confusion_file(const std::string& path);
std::string confusion_to_text(const ConfusionMatrix& matrix);

}  // namespace quand
