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
#include <vector>

#include "quand/circuit.hpp"
#include "quand/graph.hpp"
#include "quand/statevector.hpp"

namespace quand {

// Search instance: solution labels are n-bit values with wire 0 in the most
// significant bit, matching the basis-label convention. `fidelity` absent or
// 1 means an ideal run; otherwise every embedded n-CZ carries one
// depolarize-on-failure draw.
struct GroverSpec {
  int n = 0;
  std::vector<std::uint64_t> solutions;
  int cycles = 1;
  std::optional<double> fidelity;
  ConnectivityGraph graph;
};

// Phase oracle: sign flip exactly on each encoded label, built per solution
// as X on the zero bits, an embedded n-CZ, and the X pair again. Encoding the
// same label twice cancels to the identity.
Circuit build_oracle(int n, const std::vector<std::uint64_t>& solutions,
                     const ConnectivityGraph& graph);

// Inversion about the mean, realized as RY(-pi/2) and X layers around an
// embedded n-CZ followed by the X and RY(+pi/2) layers. Equals
// 2|psi0><psi0| - I up to a global phase.
Circuit build_diffusion(int n, const ConnectivityGraph& graph);

// Uniform preparation followed by `cycles` oracle + diffusion rounds; every
// embedded n-CZ instance is recorded as a macro boundary.
Circuit grover_circuit(const GroverSpec& spec);

// Success-probability model for a single-solution search with per-n-CZ
// fidelity F:
//   F^{2M} sin^2((2M+1) asin(2^{-n/2})) + (1 - F^{2M}) / 2^n.
double asp_model(int n, int cycles, double fidelity);

struct GroverRun {
  double asp = 0.0;
  double std_err = 0.0;
  std::vector<double> distribution;  // empirical, over 2^n binary labels
};

// Samples `shots` measurements (ideal) or Monte-Carlo trajectories (noisy),
// deterministically in `seed`. ASP is the fraction of shots landing on any
// encoded solution.
GroverRun run_grover(const GroverSpec& spec, std::uint64_t shots,
                     std::uint64_t seed);

// Runs every single-solution encoding j and stacks their distributions into
// a 2^n x 2^n matrix (row = encoded label). Also reports the mean diagonal,
// the solution-averaged ASP.
struct GroverMatrix {
  std::vector<std::vector<double>> rows;
  double average_asp = 0.0;
};
GroverMatrix run_grover_all_solutions(int n, int cycles,
                                      std::optional<double> fidelity,
                                      const ConnectivityGraph& graph,
                                      std::uint64_t shots, std::uint64_t seed);

struct AspPoint {
  int cycles;
  double asp;
  std::uint64_t shots;
};

struct AspCurve {
  std::vector<AspPoint> points;
};

struct FidelityFit {
  double fidelity = 0.0;
  bool flat_warning = false;
};

// Least-squares fit of the ASP model over F in [0, 1]: 1e-3 grid scan, then
// golden-section refinement to 1e-6. All-equal data yields a flat-likelihood
// warning alongside the boundary estimate.
FidelityFit fit_fidelity(const AspCurve& curve, int n);

}  // namespace quand
