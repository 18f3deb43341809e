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

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "quand/circuit.hpp"
#include "quand/statevector.hpp"

namespace quand {

// Trace overlap (1/2^n) sum_s P_exp[ideal_out(s)][s] between a measured
// truth table and an ideal permutation table. The ideal table must be a
// leak-free 0/1 permutation.
double truth_table_fidelity(const TruthTable& experiment,
                            const TruthTable& ideal);

struct EquivResult {
  bool equivalent = false;
  double overlap = 0.0;
};

// Global-phase-insensitive comparison of the binary-subspace unitaries:
// overlap = |Tr(U1^dag U2)| / 2^n, equivalent iff overlap >= 1 - tol.
EquivResult unitary_equiv(const Circuit& circuit, const Circuit& reference,
                          double tol);

// Readout confusion matrix: column = prepared state, row = measured state;
// columns sum to 1.
struct ConfusionMatrix {
  std::vector<std::vector<double>> r;

  static ConfusionMatrix make(std::vector<std::vector<double>> entries);
  std::size_t size() const { return r.size(); }
};

struct SpamResult {
  std::vector<double> corrected;  // clipped to >= 0 and renormalized
  std::vector<double> inverted;   // bare R^{-1} * raw
  double negative_mass = 0.0;     // pre-clip mass below zero
  double condition = 0.0;         // 1-norm condition estimate of R
};

SpamResult spam_correct(const ConfusionMatrix& r,
                        const std::vector<double>& raw);

// One circuit segment: wires flagged excited decay with their own T1 for the
// segment duration.
struct T1Segment {
  double duration = 0.0;
  std::vector<bool> excited;
  std::vector<double> t1;
};

// Product over segments and excited wires of exp(-duration / T1).
double t1_fidelity(const std::vector<T1Segment>& segments);

// Ancilla-assisted multiply controlled X baseline: a pairwise Toffoli tree
// collects control ANDs onto c-2 clean ancillas, the last Toffoli hits the
// target, and the tree is uncomputed. Wires: controls 0..c-1, target c,
// ancillas c+1 onward. Toffoli primitives are counted as units.
struct NcDecomposition {
  Circuit circuit;
  int ancilla_count = 0;
  std::size_t toffoli_count = 0;
};

NcDecomposition nc_ancilla_decomposition(int controls);

enum class Topology { AllToAll, Chain };

// One scheme row of the decomposition comparison: formula columns as
// published plus their numeric evaluation at n, and live synthesis counts
// where this project can produce them.
struct DecompositionRow {
  std::string scheme;
  std::string depth_formula;
  std::string size_formula;
  std::string constant;
  std::string ancilla_formula;
  std::string control_requirement;
  double depth_value = 0.0;
  double size_value = 0.0;
  double ancilla_value = 0.0;
  std::optional<long long> measured_size;
  std::optional<long long> measured_depth;
  std::optional<long long> measured_ancillas;
};

std::vector<DecompositionRow> comparison_table(int n, Topology topology);

}  // namespace quand
