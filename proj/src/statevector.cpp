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

#include "quand/statevector.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>
#include <string>

namespace quand {

namespace {

constexpr std::size_t kUnitaryGuard = std::size_t{1} << 12;

std::vector<std::size_t> strides(const std::vector<int>& dims) {
  std::vector<std::size_t> s(dims.size());
  std::size_t acc = 1;
  for (std::size_t i = dims.size(); i-- > 0;) {
    s[i] = acc;
    acc *= static_cast<std::size_t>(dims[i]);
  }
  return s;
}

int digit_at(std::size_t index, std::size_t stride, int dim) {
  return static_cast<int>((index / stride) % static_cast<std::size_t>(dim));
}

}  // namespace

double StateVector::norm_sq() const {
  double total = 0.0;
  for (const Amplitude& a : amps) total += std::norm(a);
  return total;
}

std::size_t state_count(const std::vector<int>& dims) {
  std::size_t total = 1;
  for (int d : dims) total *= static_cast<std::size_t>(d);
  return total;
}

std::size_t state_index(const std::vector<int>& dims,
                        const std::vector<int>& digits) {
  if (digits.size() != dims.size())
    throw std::invalid_argument("state_index: digit count mismatch");
  std::size_t index = 0;
  for (std::size_t i = 0; i < dims.size(); ++i) {
    if (digits[i] < 0 || digits[i] >= dims[i])
      throw std::invalid_argument("state_index: digit " +
                                  std::to_string(digits[i]) + " at wire " +
                                  std::to_string(i) + " outside dim");
    index = index * static_cast<std::size_t>(dims[i]) +
            static_cast<std::size_t>(digits[i]);
  }
  return index;
}

std::vector<int> state_digits(const std::vector<int>& dims, std::size_t index) {
  std::vector<int> digits(dims.size());
  for (std::size_t i = dims.size(); i-- > 0;) {
    digits[i] = static_cast<int>(index % static_cast<std::size_t>(dims[i]));
    index /= static_cast<std::size_t>(dims[i]);
  }
  return digits;
}

std::uint64_t binary_label(const std::vector<int>& digits) {
  std::uint64_t label = 0;
  for (int d : digits) {
    if (d != 0 && d != 1)
      throw std::invalid_argument("binary_label: non-binary digit");
    label = (label << 1) | static_cast<std::uint64_t>(d);
  }
  return label;
}

std::vector<int> binary_digits(std::size_t n, std::uint64_t label) {
  std::vector<int> digits(n);
  for (std::size_t i = 0; i < n; ++i)
    digits[i] = static_cast<int>((label >> (n - 1 - i)) & 1u);
  return digits;
}

StateVector zero_state(const std::vector<int>& dims) {
  if (dims.empty()) throw std::invalid_argument("zero_state: empty register");
  for (std::size_t i = 0; i < dims.size(); ++i)
    if (dims[i] != 2 && dims[i] != 3)
      throw std::invalid_argument("zero_state: wire " + std::to_string(i) +
                                  ": dim " + std::to_string(dims[i]) +
                                  " unsupported");
  StateVector state;
  state.dims = dims;
  state.amps.assign(state_count(dims), Amplitude{0.0, 0.0});
  state.amps[0] = Amplitude{1.0, 0.0};
  return state;
}

StateVector basis_state(const std::vector<int>& dims,
                        const std::vector<int>& digits) {
  StateVector state = zero_state(dims);
  state.amps[0] = Amplitude{0.0, 0.0};
  state.amps[state_index(dims, digits)] = Amplitude{1.0, 0.0};
  return state;
}

void apply(StateVector& state, const Op& op) {
  const auto str = strides(state.dims);
  const std::size_t total = state.amps.size();
  for (int w : op.wires)
    if (w < 0 || static_cast<std::size_t>(w) >= state.dims.size())
      throw std::invalid_argument("apply: wire out of range");

  switch (op.kind) {
    case GateKind::X: {
      const int w = op.wires[0];
      const std::size_t s = str[w];
      for (std::size_t i = 0; i < total; ++i)
        if (digit_at(i, s, state.dims[w]) == 0)
          std::swap(state.amps[i], state.amps[i + s]);
      break;
    }
    case GateKind::H:
    case GateKind::RY: {
      const int w = op.wires[0];
      const std::size_t s = str[w];
      double m00, m01, m10, m11;
      if (op.kind == GateKind::H) {
        const double inv = 1.0 / std::sqrt(2.0);
        m00 = inv, m01 = inv, m10 = inv, m11 = -inv;
      } else {
        const double c = std::cos(op.angle / 2.0);
        const double sn = std::sin(op.angle / 2.0);
        m00 = c, m01 = -sn, m10 = sn, m11 = c;
      }
      for (std::size_t i = 0; i < total; ++i)
        if (digit_at(i, s, state.dims[w]) == 0) {
          const Amplitude a0 = state.amps[i];
          const Amplitude a1 = state.amps[i + s];
          state.amps[i] = m00 * a0 + m01 * a1;
          state.amps[i + s] = m10 * a0 + m11 * a1;
        }
      break;
    }
    case GateKind::Phase: {
      const int w = op.wires[0];
      if (op.level >= state.dims[w])
        throw std::invalid_argument("PHASE: level outside wire dim");
      const std::size_t s = str[w];
      const Amplitude factor = std::polar(1.0, op.angle);
      for (std::size_t i = 0; i < total; ++i)
        if (digit_at(i, s, state.dims[w]) == op.level) state.amps[i] *= factor;
      break;
    }
    case GateKind::CZ: {
      const std::size_t sa = str[op.wires[0]], sb = str[op.wires[1]];
      const int da = state.dims[op.wires[0]], db = state.dims[op.wires[1]];
      for (std::size_t i = 0; i < total; ++i)
        if (digit_at(i, sa, da) == 1 && digit_at(i, sb, db) == 1)
          state.amps[i] = -state.amps[i];
      break;
    }
    case GateKind::CNOT: {
      const std::size_t sc = str[op.wires[0]], st = str[op.wires[1]];
      const int dc = state.dims[op.wires[0]], dt = state.dims[op.wires[1]];
      for (std::size_t i = 0; i < total; ++i)
        if (digit_at(i, sc, dc) == 1 && digit_at(i, st, dt) == 0)
          std::swap(state.amps[i], state.amps[i + st]);
      break;
    }
    case GateKind::Swap1120: {
      const int child = op.wires[0], parent = op.wires[1];
      if (state.dims[child] != 3)
        throw std::invalid_argument("SWAP1120: child wire must have dim 3");
      const std::size_t sc = str[child], sp = str[parent];
      const int dp = state.dims[parent];
      // |1,1> -> -i e^{+i theta} |2,0>, |2,0> -> -i e^{-i theta} |1,1>
      const Amplitude f_up = Amplitude{0.0, -1.0} * std::polar(1.0, op.theta);
      const Amplitude f_down =
          Amplitude{0.0, -1.0} * std::polar(1.0, -op.theta);
      for (std::size_t i = 0; i < total; ++i)
        if (digit_at(i, sc, 3) == 1 && digit_at(i, sp, dp) == 1) {
          const std::size_t j = i + sc - sp;  // child 1->2, parent 1->0
          const Amplitude a11 = state.amps[i];
          const Amplitude a20 = state.amps[j];
          state.amps[j] = f_up * a11;
          state.amps[i] = f_down * a20;
        }
      break;
    }
    case GateKind::RefMcx: {
      const int target = op.wires.back();
      const std::size_t st = str[target];
      const int dt = state.dims[target];
      for (std::size_t i = 0; i < total; ++i) {
        if (digit_at(i, st, dt) != 0) continue;
        bool all_on = true;
        for (std::size_t k = 0; k + 1 < op.wires.size(); ++k) {
          const int c = op.wires[k];
          if (digit_at(i, str[c], state.dims[c]) != 1) {
            all_on = false;
            break;
          }
        }
        if (all_on) std::swap(state.amps[i], state.amps[i + st]);
      }
      break;
    }
    case GateKind::RefMcz: {
      for (std::size_t i = 0; i < total; ++i) {
        bool all_on = true;
        for (int w : op.wires)
          if (digit_at(i, str[w], state.dims[w]) != 1) {
            all_on = false;
            break;
          }
        if (all_on) state.amps[i] = -state.amps[i];
      }
      break;
    }
  }
}

StateVector run_prefix(const Circuit& circuit, const std::vector<int>& input,
                       std::size_t op_count) {
  if (op_count > circuit.ops().size())
    throw std::invalid_argument("run_prefix: op count exceeds circuit");
  StateVector state = basis_state(circuit.dims(), input);
  for (std::size_t i = 0; i < op_count; ++i) apply(state, circuit.ops()[i]);
  return state;
}

StateVector run(const Circuit& circuit, const std::vector<int>& input) {
  return run_prefix(circuit, input, circuit.ops().size());
}

std::vector<int> classical_output(const Circuit& circuit,
                                  const std::vector<int>& input) {
  const StateVector state = run(circuit, input);
  std::size_t best = 0;
  double best_p = 0.0;
  for (std::size_t i = 0; i < state.amps.size(); ++i) {
    const double p = std::norm(state.amps[i]);
    if (p > best_p) {
      best_p = p;
      best = i;
    }
  }
  if (best_p < 1.0 - 1e-9)
    throw std::runtime_error(
        "classical_output: output is not a single basis state");
  return state_digits(state.dims, best);
}

Matrix unitary(const Circuit& circuit) {
  const std::size_t total = state_count(circuit.dims());
  if (total > kUnitaryGuard)
    throw std::invalid_argument("unitary: register exceeds 2^12 states");
  Matrix u(total, std::vector<Amplitude>(total));
  for (std::size_t s = 0; s < total; ++s) {
    const StateVector out =
        run(circuit, state_digits(circuit.dims(), s));
    for (std::size_t t = 0; t < total; ++t) u[t][s] = out.amps[t];
  }
  return u;
}

Matrix binary_unitary(const Circuit& circuit) {
  const std::size_t n = circuit.wire_count();
  if (n > 12)
    throw std::invalid_argument("binary_unitary: more than 12 wires");
  const std::size_t cols = std::size_t{1} << n;
  Matrix u(cols, std::vector<Amplitude>(cols));
  for (std::uint64_t s = 0; s < cols; ++s) {
    const StateVector out = run(circuit, binary_digits(n, s));
    for (std::uint64_t t = 0; t < cols; ++t)
      u[t][s] = out.amps[state_index(circuit.dims(), binary_digits(n, t))];
  }
  return u;
}

TruthTable truth_table(const Circuit& circuit) {
  const std::size_t n = circuit.wire_count();
  if (n > 12) throw std::invalid_argument("truth_table: register too wide");
  const std::size_t cols = std::size_t{1} << n;
  TruthTable table;
  table.n = n;
  table.cols.assign(cols, std::vector<double>(cols, 0.0));
  table.leakage.assign(cols, 0.0);
  for (std::uint64_t s = 0; s < cols; ++s) {
    const StateVector out = run(circuit, binary_digits(n, s));
    for (std::size_t i = 0; i < out.amps.size(); ++i) {
      const double p = std::norm(out.amps[i]);
      if (p == 0.0) continue;
      const auto digits = state_digits(out.dims, i);
      const bool leaked =
          std::any_of(digits.begin(), digits.end(), [](int d) { return d > 1; });
      if (leaked)
        table.leakage[s] += p;
      else
        table.cols[s][binary_label(digits)] += p;
    }
  }
  return table;
}

std::uint64_t derive_seed(std::uint64_t master, std::uint64_t index) {
  // splitmix64 finalizer over the master stream position
  std::uint64_t z = master + 0x9E3779B97F4A7C15ULL * (index + 1);
  z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ULL;
  z = (z ^ (z >> 27)) * 0x94D049BB133111EBULL;
  return z ^ (z >> 31);
}

double next_uniform(std::mt19937_64& rng) {
  return static_cast<double>(rng() >> 11) * 0x1.0p-53;
}

std::map<std::uint64_t, std::uint64_t> sample(const StateVector& state,
                                              std::uint64_t shots,
                                              std::uint64_t seed) {
  if (shots < 1) throw std::invalid_argument("sample: shots must be >= 1");
  std::vector<double> cdf(state.amps.size());
  double acc = 0.0;
  for (std::size_t i = 0; i < state.amps.size(); ++i) {
    acc += std::norm(state.amps[i]);
    cdf[i] = acc;
  }
  std::mt19937_64 rng(seed);
  std::map<std::uint64_t, std::uint64_t> counts;
  for (std::uint64_t shot = 0; shot < shots; ++shot) {
    const double u = next_uniform(rng) * acc;
    const auto it = std::upper_bound(cdf.begin(), cdf.end(), u);
    const std::size_t idx =
        std::min<std::size_t>(it - cdf.begin(), cdf.size() - 1);
    ++counts[idx];
  }
  return counts;
}

std::uint64_t run_noisy_trajectory(const Circuit& circuit,
                                   const NoiseParams& noise,
                                   const std::vector<int>& input,
                                   std::uint64_t seed) {
  const double f = noise.macro_fidelity;
  if (f < 0.0 || f > 1.0)
    throw std::invalid_argument("noise: fidelity outside [0, 1]");
  const std::size_t macros = circuit.macro_boundaries().size();
  if (macros == 0 && f < 1.0)
    throw std::invalid_argument(
        "noise: circuit has no macro boundaries; model undefined");
  std::mt19937_64 rng(seed);
  bool failed = false;
  for (std::size_t m = 0; m < macros; ++m)
    if (next_uniform(rng) >= f) failed = true;
  const std::size_t n = circuit.wire_count();
  if (failed) {
    const std::uint64_t labels = std::uint64_t{1} << n;
    return static_cast<std::uint64_t>(next_uniform(rng) *
                                      static_cast<double>(labels)) %
           labels;
  }
  const StateVector out = run(circuit, input);
  const auto counts = sample(out, 1, rng());
  const auto digits = state_digits(out.dims, counts.begin()->first);
  return binary_label(digits);
}

}  // namespace quand
