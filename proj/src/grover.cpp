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

#include "quand/grover.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <stdexcept>

#include "quand/synthesis.hpp"

namespace quand {

namespace {

constexpr double kPi = std::numbers::pi;

void check_labels(int n, const std::vector<std::uint64_t>& solutions) {
  if (n < 2) throw std::invalid_argument("grover: need n >= 2");
  if (solutions.empty())
    throw std::invalid_argument("grover: empty solution list");
  for (std::uint64_t j : solutions)
    if (j >= (std::uint64_t{1} << n))
      throw std::invalid_argument("grover: solution label outside 2^n");
}

void append_oracle(Circuit& circuit, int n,
                   const std::vector<std::uint64_t>& solutions,
                   const std::vector<Op>& mcz) {
  for (std::uint64_t j : solutions) {
    const auto digits = binary_digits(n, j);
    for (int w = 0; w < n; ++w)
      if (digits[w] == 0) circuit.x(w);
    circuit.extend(mcz);
    circuit.mark_macro();
    for (int w = 0; w < n; ++w)
      if (digits[w] == 0) circuit.x(w);
  }
}

void append_diffusion(Circuit& circuit, int n, const std::vector<Op>& mcz) {
  for (int w = 0; w < n; ++w) circuit.ry(w, -kPi / 2.0);
  for (int w = 0; w < n; ++w) circuit.x(w);
  circuit.extend(mcz);
  circuit.mark_macro();
  for (int w = 0; w < n; ++w) circuit.x(w);
  for (int w = 0; w < n; ++w) circuit.ry(w, kPi / 2.0);
}

struct EmbeddedMcz {
  std::vector<int> dims;
  std::vector<Op> ops;
};

EmbeddedMcz embedded_mcz(int n, const ConnectivityGraph& graph) {
  if (graph.vertex_count() != n)
    throw std::invalid_argument("grover: graph size does not match n");
  const Synthesis mcz = synth_mcz_tree(graph);
  return EmbeddedMcz{mcz.circuit.dims(), mcz_ops(mcz.plan)};
}

// Ideal measurement distribution over the 2^n binary labels. Synthesized
// circuits leave no |2> population at the boundary, which is checked here.
std::vector<double> binary_distribution(const StateVector& state, int n) {
  std::vector<double> dist(std::size_t{1} << n, 0.0);
  double leak = 0.0;
  for (std::size_t i = 0; i < state.amps.size(); ++i) {
    const double p = std::norm(state.amps[i]);
    if (p == 0.0) continue;
    const auto digits = state_digits(state.dims, i);
    if (std::any_of(digits.begin(), digits.end(), [](int d) { return d > 1; }))
      leak += p;
    else
      dist[binary_label(digits)] += p;
  }
  if (leak > 1e-9)
    throw std::runtime_error("grover: leaked population at circuit boundary");
  return dist;
}

}  // namespace

Circuit build_oracle(int n, const std::vector<std::uint64_t>& solutions,
                     const ConnectivityGraph& graph) {
  check_labels(n, solutions);
  const EmbeddedMcz mcz = embedded_mcz(n, graph);
  Circuit circuit = Circuit::make(mcz.dims);
  append_oracle(circuit, n, solutions, mcz.ops);
  return circuit;
}

Circuit build_diffusion(int n, const ConnectivityGraph& graph) {
  if (n < 2) throw std::invalid_argument("diffusion: need n >= 2");
  const EmbeddedMcz mcz = embedded_mcz(n, graph);
  Circuit circuit = Circuit::make(mcz.dims);
  append_diffusion(circuit, n, mcz.ops);
  return circuit;
}

Circuit grover_circuit(const GroverSpec& spec) {
  check_labels(spec.n, spec.solutions);
  if (spec.cycles < 1) throw std::invalid_argument("grover: cycles must be >= 1");
  const EmbeddedMcz mcz = embedded_mcz(spec.n, spec.graph);
  Circuit circuit = Circuit::make(mcz.dims);
  for (int w = 0; w < spec.n; ++w) circuit.h(w);
  for (int cycle = 0; cycle < spec.cycles; ++cycle) {
    append_oracle(circuit, spec.n, spec.solutions, mcz.ops);
    append_diffusion(circuit, spec.n, mcz.ops);
  }
  return circuit;
}

double asp_model(int n, int cycles, double fidelity) {
  if (n < 1) throw std::invalid_argument("asp_model: need n >= 1");
  if (cycles < 0) throw std::invalid_argument("asp_model: cycles must be >= 0");
  if (fidelity < 0.0 || fidelity > 1.0)
    throw std::invalid_argument("asp_model: fidelity outside [0, 1]");
  const double dims = std::pow(2.0, n);
  const double attenuation = std::pow(fidelity, 2 * cycles);
  const double amp = std::sin((2 * cycles + 1) * std::asin(1.0 / std::sqrt(dims)));
  return attenuation * amp * amp + (1.0 - attenuation) / dims;
}

GroverRun run_grover(const GroverSpec& spec, std::uint64_t shots,
                     std::uint64_t seed) {
  if (shots < 1) throw std::invalid_argument("grover: shots must be >= 1");
  const Circuit circuit = grover_circuit(spec);
  const std::size_t labels = std::size_t{1} << spec.n;
  std::vector<int> input(spec.n, 0);
  const StateVector final_state = run(circuit, input);
  const std::vector<double> ideal = binary_distribution(final_state, spec.n);

  std::vector<double> cdf(labels);
  double acc = 0.0;
  for (std::size_t i = 0; i < labels; ++i) {
    acc += ideal[i];
    cdf[i] = acc;
  }
  auto draw_ideal = [&](std::uint64_t s) {
    std::mt19937_64 rng(s);
    const double u = next_uniform(rng) * acc;
    const auto it = std::upper_bound(cdf.begin(), cdf.end(), u);
    return std::min<std::size_t>(it - cdf.begin(), labels - 1);
  };

  const double f = spec.fidelity.value_or(1.0);
  if (f < 0.0 || f > 1.0)
    throw std::invalid_argument("grover: fidelity outside [0, 1]");
  const std::size_t macros = circuit.macro_boundaries().size();

  std::vector<std::uint64_t> counts(labels, 0);
  if (f >= 1.0) {
    for (const auto& [idx, cnt] : sample(final_state, shots, seed)) {
      const auto digits = state_digits(final_state.dims, idx);
      counts[binary_label(digits)] += cnt;
    }
  } else {
    // Per-trajectory seeds; draw order mirrors run_noisy_trajectory so the
    // memoized ideal state changes nothing observable.
    for (std::uint64_t t = 0; t < shots; ++t) {
      std::mt19937_64 rng(derive_seed(seed, t));
      bool failed = false;
      for (std::size_t m = 0; m < macros; ++m)
        if (next_uniform(rng) >= f) failed = true;
      std::size_t outcome;
      if (failed)
        outcome = static_cast<std::size_t>(next_uniform(rng) *
                                           static_cast<double>(labels)) %
                  labels;
      else
        outcome = draw_ideal(rng());
      ++counts[outcome];
    }
  }

  GroverRun result;
  result.distribution.assign(labels, 0.0);
  for (std::size_t i = 0; i < labels; ++i)
    result.distribution[i] =
        static_cast<double>(counts[i]) / static_cast<double>(shots);
  for (std::uint64_t j : spec.solutions) result.asp += result.distribution[j];
  result.std_err =
      std::sqrt(result.asp * (1.0 - result.asp) / static_cast<double>(shots));
  return result;
}

GroverMatrix run_grover_all_solutions(int n, int cycles,
                                      std::optional<double> fidelity,
                                      const ConnectivityGraph& graph,
                                      std::uint64_t shots, std::uint64_t seed) {
  const std::size_t labels = std::size_t{1} << n;
  GroverMatrix matrix;
  matrix.rows.resize(labels);
  for (std::uint64_t j = 0; j < labels; ++j) {
    GroverSpec spec{n, {j}, cycles, fidelity, graph};
    const GroverRun row = run_grover(spec, shots, derive_seed(seed, j));
    matrix.average_asp += row.distribution[j];
    matrix.rows[j] = row.distribution;
  }
  matrix.average_asp /= static_cast<double>(labels);
  return matrix;
}

FidelityFit fit_fidelity(const AspCurve& curve, int n) {
  if (curve.points.size() < 2)
    throw std::invalid_argument("fit: need at least 2 points");
  for (std::size_t i = 0; i < curve.points.size(); ++i) {
    const AspPoint& p = curve.points[i];
    if (p.asp < 0.0 || p.asp > 1.0)
      throw std::invalid_argument("fit: ASP outside [0, 1]");
    if (i > 0 && curve.points[i - 1].cycles >= p.cycles)
      throw std::invalid_argument("fit: cycle counts must increase");
  }

  auto sse = [&](double f) {
    double total = 0.0;
    for (const AspPoint& p : curve.points) {
      const double r = asp_model(n, p.cycles, f) - p.asp;
      total += r * r;
    }
    return total;
  };

  double best_f = 0.0, best = sse(0.0);
  for (int i = 1; i <= 1000; ++i) {
    const double f = static_cast<double>(i) / 1000.0;
    const double v = sse(f);
    if (v < best) {
      best = v;
      best_f = f;
    }
  }

  // Golden-section refinement inside the bracketing grid cell.
  double lo = std::max(0.0, best_f - 1e-3);
  double hi = std::min(1.0, best_f + 1e-3);
  const double ratio = (std::sqrt(5.0) - 1.0) / 2.0;
  double x1 = hi - ratio * (hi - lo);
  double x2 = lo + ratio * (hi - lo);
  double f1 = sse(x1), f2 = sse(x2);
  while (hi - lo > 1e-6) {
    if (f1 <= f2) {
      hi = x2;
      x2 = x1;
      f2 = f1;
      x1 = hi - ratio * (hi - lo);
      f1 = sse(x1);
    } else {
      lo = x1;
      x1 = x2;
      f1 = f2;
      x2 = lo + ratio * (hi - lo);
      f2 = sse(x2);
    }
  }

  FidelityFit fit;
  fit.fidelity = 0.5 * (lo + hi);
  const auto [mn, mx] = std::minmax_element(
      curve.points.begin(), curve.points.end(),
      [](const AspPoint& a, const AspPoint& b) { return a.asp < b.asp; });
  fit.flat_warning = (mx->asp - mn->asp) < 1e-12;
  return fit;
}

}  // namespace quand
