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

#include "quand/analysis.hpp"

#include <algorithm>
#include <cmath>
#include <deque>
#include <stdexcept>

#include "quand/synthesis.hpp"

namespace quand {

namespace {

// Extracts the permutation of an ideal 0/1 truth table; throws when the
// table is not an exact leak-free permutation.
std::vector<std::size_t> ideal_permutation(const TruthTable& ideal) {
  const std::size_t cols = ideal.cols.size();
  std::vector<std::size_t> out(cols);
  std::vector<bool> hit(cols, false);
  for (std::size_t s = 0; s < cols; ++s) {
    if (ideal.leakage[s] > 1e-9)
      throw std::invalid_argument("fidelity: ideal table leaks");
    std::size_t ones = 0, target = 0;
    for (std::size_t t = 0; t < cols; ++t) {
      const double v = ideal.cols[s][t];
      if (std::abs(v - 1.0) < 1e-9) {
        ++ones;
        target = t;
      } else if (std::abs(v) > 1e-9) {
        throw std::invalid_argument("fidelity: ideal table is not 0/1");
      }
    }
    if (ones != 1 || hit[target])
      throw std::invalid_argument("fidelity: ideal table is not a permutation");
    hit[target] = true;
    out[s] = target;
  }
  return out;
}

}  // namespace

double truth_table_fidelity(const TruthTable& experiment,
                            const TruthTable& ideal) {
  if (experiment.n != ideal.n)
    throw std::invalid_argument("fidelity: qubit count mismatch");
  const auto perm = ideal_permutation(ideal);
  double trace = 0.0;
  for (std::size_t s = 0; s < experiment.cols.size(); ++s)
    trace += experiment.cols[s][perm[s]];
  return trace / static_cast<double>(experiment.cols.size());
}

EquivResult unitary_equiv(const Circuit& circuit, const Circuit& reference,
                          double tol) {
  if (circuit.wire_count() != reference.wire_count())
    throw std::invalid_argument("unitary_equiv: wire count mismatch");
  const Matrix u1 = binary_unitary(circuit);
  const Matrix u2 = binary_unitary(reference);
  Amplitude trace{0.0, 0.0};
  for (std::size_t t = 0; t < u1.size(); ++t)
    for (std::size_t s = 0; s < u1.size(); ++s)
      trace += std::conj(u1[t][s]) * u2[t][s];
  EquivResult result;
  result.overlap = std::abs(trace) / static_cast<double>(u1.size());
  result.equivalent = result.overlap >= 1.0 - tol;
  return result;
}

ConfusionMatrix ConfusionMatrix::make(
    std::vector<std::vector<double>> entries) {
  const std::size_t n = entries.size();
  for (const auto& row : entries)
    if (row.size() != n)
      throw std::invalid_argument("confusion matrix: not square");
  for (std::size_t c = 0; c < n; ++c) {
    double sum = 0.0;
    for (std::size_t r = 0; r < n; ++r) {
      if (entries[r][c] < 0.0)
        throw std::invalid_argument("confusion matrix: negative entry");
      sum += entries[r][c];
    }
    if (std::abs(sum - 1.0) > 1e-6)
      throw std::invalid_argument("confusion matrix: column does not sum to 1");
  }
  ConfusionMatrix m;
  m.r = std::move(entries);
  return m;
}

SpamResult spam_correct(const ConfusionMatrix& r,
                        const std::vector<double>& raw) {
  const std::size_t n = r.size();
  if (raw.size() != n)
    throw std::invalid_argument("spam: raw distribution size mismatch");

  // Invert by Gauss-Jordan with partial pivoting.
  std::vector<std::vector<double>> a(r.r);
  std::vector<std::vector<double>> inv(n, std::vector<double>(n, 0.0));
  for (std::size_t i = 0; i < n; ++i) inv[i][i] = 1.0;
  for (std::size_t col = 0; col < n; ++col) {
    std::size_t pivot = col;
    for (std::size_t row = col + 1; row < n; ++row)
      if (std::abs(a[row][col]) > std::abs(a[pivot][col])) pivot = row;
    if (std::abs(a[pivot][col]) < 1e-12)
      throw std::invalid_argument("spam: confusion matrix is singular");
    std::swap(a[pivot], a[col]);
    std::swap(inv[pivot], inv[col]);
    const double d = a[col][col];
    for (std::size_t j = 0; j < n; ++j) {
      a[col][j] /= d;
      inv[col][j] /= d;
    }
    for (std::size_t row = 0; row < n; ++row) {
      if (row == col) continue;
      const double factor = a[row][col];
      if (factor == 0.0) continue;
      for (std::size_t j = 0; j < n; ++j) {
        a[row][j] -= factor * a[col][j];
        inv[row][j] -= factor * inv[col][j];
      }
    }
  }

  auto one_norm = [n](const std::vector<std::vector<double>>& m) {
    double best = 0.0;
    for (std::size_t c = 0; c < n; ++c) {
      double sum = 0.0;
      for (std::size_t row = 0; row < n; ++row) sum += std::abs(m[row][c]);
      best = std::max(best, sum);
    }
    return best;
  };

  SpamResult result;
  result.condition = one_norm(r.r) * one_norm(inv);
  result.inverted.assign(n, 0.0);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j)
      result.inverted[i] += inv[i][j] * raw[j];

  result.corrected = result.inverted;
  for (double& v : result.corrected)
    if (v < 0.0) {
      result.negative_mass += -v;
      v = 0.0;
    }
  double total = 0.0;
  for (double v : result.corrected) total += v;
  if (total <= 0.0)
    throw std::runtime_error("spam: corrected distribution vanished");
  for (double& v : result.corrected) v /= total;
  return result;
}

double t1_fidelity(const std::vector<T1Segment>& segments) {
  double fidelity = 1.0;
  for (const T1Segment& segment : segments) {
    if (segment.duration < 0.0)
      throw std::invalid_argument("t1: negative duration");
    if (segment.excited.size() != segment.t1.size())
      throw std::invalid_argument("t1: wire flag/time size mismatch");
    for (std::size_t w = 0; w < segment.excited.size(); ++w) {
      if (segment.t1[w] <= 0.0)
        throw std::invalid_argument("t1: nonpositive T1");
      if (segment.excited[w])
        fidelity *= std::exp(-segment.duration / segment.t1[w]);
    }
  }
  return fidelity;
}

NcDecomposition nc_ancilla_decomposition(int controls) {
  if (controls < 2)
    throw std::invalid_argument("nc decomposition: need at least 2 controls");
  const int target = controls;
  const int ancillas = controls - 2;
  const int wires = controls + 1 + ancillas;
  Circuit circuit =
      Circuit::make(std::vector<int>(wires, 2), CircuitLabel::Reference);

  std::deque<int> pending;
  for (int c = 0; c < controls; ++c) pending.push_back(c);
  int next_ancilla = controls + 1;
  std::vector<std::pair<std::pair<int, int>, int>> compute;  // ((u,v), anc)
  while (pending.size() > 2) {
    const int u = pending.front();
    pending.pop_front();
    const int v = pending.front();
    pending.pop_front();
    const int a = next_ancilla++;
    compute.push_back({{u, v}, a});
    pending.push_back(a);
  }
  for (const auto& [uv, a] : compute) circuit.ref_mcx({uv.first, uv.second}, a);
  circuit.ref_mcx({pending[0], pending[1]}, target);
  for (auto it = compute.rbegin(); it != compute.rend(); ++it)
    circuit.ref_mcx({it->first.first, it->first.second}, it->second);

  NcDecomposition result;
  result.ancilla_count = ancillas;
  result.toffoli_count = circuit.ops().size();
  result.circuit = std::move(circuit);
  return result;
}

std::vector<DecompositionRow> comparison_table(int n, Topology topology) {
  if (n < 2) throw std::invalid_argument("comparison table: need n >= 2");
  const double log2n = std::log2(static_cast<double>(n));
  const double log3n = std::log(static_cast<double>(n)) / std::log(3.0);
  std::vector<DecompositionRow> rows;

  auto nc_measown = [&]() {
    const NcDecomposition nc = nc_ancilla_decomposition(n);
    return std::pair<long long, long long>(
        static_cast<long long>(nc.toffoli_count), nc.ancilla_count);
  };

  if (topology == Topology::AllToAll) {
    {
      DecompositionRow row{"nielsen-chuang", "log2 n", "n", "12", "n-2",
                           "qubits",         log2n,    double(n), double(n - 2),
                           {},               {},       {}};
      const auto [size, anc] = nc_measown();
      row.measured_size = size;
      row.measured_ancillas = anc;
      rows.push_back(row);
    }
    rows.push_back({"barenco", "n^2", "n^2", "48", "0", "qubits",
                    double(n) * n, double(n) * n, 0.0, {}, {}, {}});
    rows.push_back({"gokhale", "log3 n", "n", "2", "0", "three-qutrit control",
                    log3n, double(n), 0.0, {}, {}, {}});
    rows.push_back({"ralph-lanyon", "n", "n", "2", "0", "n-level qudit control",
                    double(n), double(n), 0.0, {}, {}, {}});
    {
      DecompositionRow row{"quand", "log2 n",  "n", "2", "0",
                           "swap 11-20", log2n,    double(n), 0.0,
                           {},           {},       {}};
      const Synthesis mcz = synth_mcz_tree(ConnectivityGraph::complete(n));
      row.measured_size =
          static_cast<long long>(mcz.circuit.gate_count().multi_wire);
      row.measured_depth = static_cast<long long>(
          mcz.circuit.depth(DepthMode::MultiWireOnly));
      row.measured_ancillas = 0;
      rows.push_back(row);
    }
  } else {
    {
      DecompositionRow row{"nielsen-chuang", "n", "n", ">12", "n-2",
                           "qubits",         double(n), double(n), double(n - 2),
                           {},               {},        {}};
      const auto [size, anc] = nc_measown();
      row.measured_size = size;
      row.measured_ancillas = anc;
      rows.push_back(row);
    }
    rows.push_back({"inada", "n", "n", "2", "0", "qutrit control", double(n),
                    double(n), 0.0, {}, {}, {}});
    {
      DecompositionRow row{"quand", "n", "n", "2", "0",
                           "swap 11-20", double(n), double(n), 0.0,
                           {},           {},        {}};
      const Synthesis mcz = synth_mcz_chain(n);
      row.measured_size =
          static_cast<long long>(mcz.circuit.gate_count().multi_wire);
      row.measured_depth = static_cast<long long>(
          mcz.circuit.depth(DepthMode::MultiWireOnly));
      row.measured_ancillas = 0;
      rows.push_back(row);
    }
  }
  return rows;
}

}  // namespace quand
