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

#include <complex>
#include <cstdint>
#include <map>
#include <random>
#include <vector>

#include "quand/circuit.hpp"

namespace quand {

using Amplitude = std::complex<double>;
using Matrix = std::vector<std::vector<Amplitude>>;

// Dense amplitudes over a mixed 2/3-dimensional register. Basis labels read
// |s0 s1 ... s{n-1}> with wire 0 as the most significant digit, so the flat
// index of a label is sum_i s_i * prod_{j>i} dims_j.
struct StateVector {
  std::vector<int> dims;
  std::vector<Amplitude> amps;

  double norm_sq() const;
};

std::size_t state_count(const std::vector<int>& dims);
std::size_t state_index(const std::vector<int>& dims,
                        const std::vector<int>& digits);
std::vector<int> state_digits(const std::vector<int>& dims, std::size_t index);

// Packs binary digits into the 2^n label used for truth tables and sampling
// reports; digit of wire 0 lands in the most significant bit.
std::uint64_t binary_label(const std::vector<int>& digits);
std::vector<int> binary_digits(std::size_t n, std::uint64_t label);

StateVector zero_state(const std::vector<int>& dims);
StateVector basis_state(const std::vector<int>& dims,
                        const std::vector<int>& digits);

void apply(StateVector& state, const Op& op);

StateVector run(const Circuit& circuit, const std::vector<int>& input);
// Applies only the first `op_count` ops; used to probe intermediate states.
StateVector run_prefix(const Circuit& circuit, const std::vector<int>& input,
                       std::size_t op_count);

// Runs a basis input through a circuit that permutes the basis (up to phase)
// and returns the output digits. Throws if the output is not concentrated on
// a single basis state.
std::vector<int> classical_output(const Circuit& circuit,
                                  const std::vector<int>& input);

// Full unitary over the mixed-dimension space, column s = circuit applied to
// basis state s. Guarded to registers of at most 2^12 states.
Matrix unitary(const Circuit& circuit);

// 2^n x 2^n block over binary basis labels only (rows and columns both
// restricted to binary digit strings).
Matrix binary_unitary(const Circuit& circuit);

// Output-distribution columns over binary inputs plus per-input leakage mass
// (probability on any state containing a |2>).
struct TruthTable {
  std::size_t n = 0;
  std::vector<std::vector<double>> cols;  // cols[input][output]
  std::vector<double> leakage;            // leakage[input]
};

TruthTable truth_table(const Circuit& circuit);

// Deterministic counter-derived child seed; trajectory i of a run with master
// seed s always sees derive_seed(s, i) regardless of execution order.
std::uint64_t derive_seed(std::uint64_t master, std::uint64_t index);
// Uniform double in [0, 1) from the top 53 bits of the generator output;
// avoids distribution objects so streams are identical across libraries.
double next_uniform(std::mt19937_64& rng);

// Multinomial sampling from |amplitude|^2; counts are keyed by flat basis
// index and sum to `shots`. Bit-for-bit reproducible for a fixed seed.
std::map<std::uint64_t, std::uint64_t> sample(const StateVector& state,
                                              std::uint64_t shots,
                                              std::uint64_t seed);

// Per-macro-gate fidelity of the depolarize-on-failure channel.
struct NoiseParams {
  double macro_fidelity = 1.0;
};

// Stochastic trajectory: every marked macro gate fails independently with
// probability 1 - F. Any failure scrambles the run and the measured outcome
// is uniform over the 2^n binary labels; otherwise the ideal final state is
// sampled once. Returns the binary outcome label.
std::uint64_t run_noisy_trajectory(const Circuit& circuit,
                                   const NoiseParams& noise,
                                   const std::vector<int>& input,
                                   std::uint64_t seed);

}  // namespace quand
