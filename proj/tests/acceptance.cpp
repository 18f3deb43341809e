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

// Acceptance suite: every release-gating property in one binary, one
// pass/fail line per criterion, each checked at its stated tolerance.

#include <chrono>
#include <cmath>
#include <complex>
#include <cstdint>
#include <functional>
#include <iomanip>
#include <iostream>
#include <numbers>
#include <random>
#include <sstream>
#include <string>
#include <vector>

#include "quand/analysis.hpp"
#include "quand/arithmetic.hpp"
#include "quand/grover.hpp"
#include "quand/statevector.hpp"
#include "quand/synthesis.hpp"

using namespace quand;

namespace {

constexpr double kPi = std::numbers::pi;

Circuit ref_mcz_circuit(std::size_t n) {
  Circuit ref = Circuit::make(std::vector<int>(n, 2), CircuitLabel::Reference);
  std::vector<int> wires(n);
  for (std::size_t i = 0; i < n; ++i) wires[i] = static_cast<int>(i);
  ref.ref_mcz(wires);
  return ref;
}

Circuit ref_mcx_circuit(std::size_t n, int target) {
  Circuit ref = Circuit::make(std::vector<int>(n, 2), CircuitLabel::Reference);
  std::vector<int> controls;
  for (std::size_t i = 0; i < n; ++i)
    if (static_cast<int>(i) != target) controls.push_back(static_cast<int>(i));
  ref.ref_mcx(controls, target);
  return ref;
}

bool tables_match(const TruthTable& a, const TruthTable& b, double tol) {
  for (std::size_t s = 0; s < a.cols.size(); ++s) {
    if (std::abs(a.leakage[s] - b.leakage[s]) > tol) return false;
    for (std::size_t t = 0; t < a.cols.size(); ++t)
      if (std::abs(a.cols[s][t] - b.cols[s][t]) > tol) return false;
  }
  return true;
}

// --- criterion 1: QuAND truth table ----------------------------------------

bool criterion_quand_truth_table(std::string& detail) {
  Circuit q = Circuit::make({3, 2});
  q.extend(quand_ops(0, 1, 0.0));
  // (child,parent) inputs 00,01,10,11 -> child 1,2,0,0; parent = AND.
  const int expected_child[4] = {1, 2, 0, 0};
  for (int a = 0; a < 2; ++a)
    for (int b = 0; b < 2; ++b) {
      const StateVector out = run(q, {a, b});
      const std::vector<int> expect{expected_child[2 * a + b], a & b};
      const std::size_t idx = state_index({3, 2}, expect);
      if (std::abs(std::abs(out.amps[idx]) - 1.0) > 1e-12) {
        detail = "wrong output for input " + std::to_string(a) +
                 std::to_string(b);
        return false;
      }
    }
  detail = "inputs 00,01,10,11 -> child 1,2,0,0, parent AND (tol 1e-12)";
  return true;
}

// --- criterion 2: round-trip identity ---------------------------------------

bool criterion_round_trip(std::string& detail) {
  for (const double theta : {0.0, kPi / 3.0, 1.0}) {
    Circuit ab = Circuit::make({3, 2});
    ab.extend(quand_ops(0, 1, theta));
    ab.extend(reverse_quand_ops(0, 1, theta));
    Circuit ba = Circuit::make({3, 2});
    ba.extend(reverse_quand_ops(0, 1, theta));
    ba.extend(quand_ops(0, 1, theta));
    for (const Circuit& c : {ab, ba}) {
      const Matrix u = binary_unitary(c);
      for (std::size_t t = 0; t < 4; ++t)
        for (std::size_t s = 0; s < 4; ++s) {
          const Amplitude expect{t == s ? 1.0 : 0.0, 0.0};
          if (std::abs(u[t][s] - expect) > 1e-12) {
            detail = "residual at theta=" + std::to_string(theta);
            return false;
          }
        }
    }
  }
  detail = "identity incl. phases for theta in {0, pi/3, 1.0} (tol 1e-12)";
  return true;
}

// --- criterion 3: chain MCZ -------------------------------------------------

bool criterion_chain_mcz(std::string& detail) {
  for (int n = 2; n <= 10; ++n) {
    const Synthesis s = synth_mcz_chain(n);
    if (s.circuit.gate_count().multi_wire !=
        static_cast<std::size_t>(2 * n - 3)) {
      detail = "gate count != 2n-3 at n=" + std::to_string(n);
      return false;
    }
    if (n <= 8) {
      const Matrix u = binary_unitary(s.circuit);
      const std::size_t dim = u.size();
      const Amplitude phase = u[0][0];  // divide out the global phase
      if (std::abs(std::abs(phase) - 1.0) > 1e-10) {
        detail = "non-unimodular corner at n=" + std::to_string(n);
        return false;
      }
      for (std::size_t t = 0; t < dim; ++t)
        for (std::size_t ss = 0; ss < dim; ++ss) {
          const double expect = (t == ss) ? ((ss == dim - 1) ? -1.0 : 1.0) : 0.0;
          if (std::abs(u[t][ss] / phase - Amplitude{expect, 0.0}) > 1e-10) {
            detail = "unitary mismatch at n=" + std::to_string(n);
            return false;
          }
        }
    } else {
      // Truth table plus phase probe for n = 9, 10.
      const std::size_t labels = std::size_t{1} << n;
      Amplitude reference{0.0, 0.0};
      for (std::uint64_t in = 0; in < labels; ++in) {
        const auto digits = binary_digits(n, in);
        const StateVector out = run(s.circuit, digits);
        const std::size_t self = state_index(s.circuit.dims(), digits);
        const Amplitude amp = out.amps[self];
        double rest = 0.0;
        for (std::size_t i = 0; i < out.amps.size(); ++i)
          if (i != self) rest += std::norm(out.amps[i]);
        if (rest > 1e-12 || std::abs(std::abs(amp) - 1.0) > 1e-10) {
          detail = "not diagonal at n=" + std::to_string(n);
          return false;
        }
        if (in == 0) reference = amp;
        const double expect = (in == labels - 1) ? -1.0 : 1.0;
        if (std::abs(amp / reference - Amplitude{expect, 0.0}) > 1e-10) {
          detail = "phase probe failed at n=" + std::to_string(n);
          return false;
        }
      }
    }
  }
  detail = "2n-3 gates and diag(1,...,-1) for n=2..10 (tol 1e-10)";
  return true;
}

// --- criterion 4: tree MCZ --------------------------------------------------

bool criterion_tree_mcz(std::string& detail) {
  const ConnectivityGraph binary_tree = ConnectivityGraph::make(
      7, {{0, 1}, {0, 2}, {1, 3}, {1, 4}, {2, 5}, {2, 6}});
  struct Case {
    const char* name;
    ConnectivityGraph graph;
  };
  const std::vector<Case> cases{{"8-cycle", ConnectivityGraph::cycle(8)},
                                {"3x3-grid", ConnectivityGraph::grid(3, 3)},
                                {"binary-tree", binary_tree}};
  for (const Case& c : cases) {
    const Synthesis s = synth_mcz_tree(c.graph);
    const EquivResult eq = unitary_equiv(
        s.circuit, ref_mcz_circuit(c.graph.vertex_count()), 1e-10);
    if (!eq.equivalent) {
      detail = std::string("reference mismatch on ") + c.name;
      return false;
    }
  }
  const Synthesis bt = synth_mcz_tree(binary_tree);
  const std::size_t depth = bt.circuit.depth(DepthMode::MultiWireOnly);
  const std::size_t bound = 2 * 3 + 1;  // 2 ceil(log2 7) + 1
  if (depth > bound) {
    detail = "binary-tree depth " + std::to_string(depth) + " > " +
             std::to_string(bound);
    return false;
  }
  detail = "REF_MCZ equivalence on ring/grid/tree; tree depth " +
           std::to_string(depth) + " <= " + std::to_string(bound);
  return true;
}

// --- criterion 5: embedding semantics ---------------------------------------

bool criterion_embedding(std::string& detail) {
  for (int n = 2; n <= 8; ++n) {
    const Synthesis s = synth_mcz_chain(n);
    const std::size_t embed_ops = 2 * s.plan.embed.size();
    const auto [root_a, root_b] = s.plan.root_edge;
    for (std::uint64_t in = 0; in < (std::uint64_t{1} << n); ++in) {
      const auto digits = binary_digits(n, in);
      const StateVector mid = run_prefix(s.circuit, digits, embed_ops);
      std::size_t best = 0;
      double best_p = 0.0;
      for (std::size_t i = 0; i < mid.amps.size(); ++i)
        if (std::norm(mid.amps[i]) > best_p) {
          best_p = std::norm(mid.amps[i]);
          best = i;
        }
      if (best_p < 1.0 - 1e-10) {
        detail = "embedded state not classical at n=" + std::to_string(n);
        return false;
      }
      const auto mid_digits = state_digits(mid.dims, best);
      int and_a = 1, and_b = 1;
      for (int w = 0; w < n; ++w)
        (s.plan.side[w] == 0 ? and_a : and_b) &= digits[w];
      if (mid_digits[root_a] != and_a || mid_digits[root_b] != and_b) {
        detail = "root AND wrong at n=" + std::to_string(n) +
                 " input=" + std::to_string(in);
        return false;
      }
    }
  }
  detail = "root wires hold the side ANDs for every input, n=2..8";
  return true;
}

// --- criterion 6: Toffoli and Fredkin ---------------------------------------

bool criterion_toffoli_fredkin(std::string& detail) {
  for (int n = 3; n <= 6; ++n) {
    const Synthesis s = synth_toffoli(ConnectivityGraph::path(n), n - 1);
    const TruthTable tt = truth_table(s.circuit);
    const TruthTable ref = truth_table(ref_mcx_circuit(n, n - 1));
    if (!tables_match(tt, ref, 1e-10)) {
      detail = "toffoli mismatch at n=" + std::to_string(n);
      return false;
    }
    for (double l : tt.leakage)
      if (l > 1e-12) {
        detail = "toffoli leakage at n=" + std::to_string(n);
        return false;
      }
  }
  for (int n = 3; n <= 5; ++n) {
    const Synthesis s =
        synth_fredkin(ConnectivityGraph::path(n), {n - 2, n - 1});
    const TruthTable tt = truth_table(s.circuit);
    for (std::uint64_t in = 0; in < (std::uint64_t{1} << n); ++in) {
      auto expect = binary_digits(n, in);
      bool all_on = true;
      for (int w = 0; w < n - 2; ++w) all_on = all_on && expect[w] == 1;
      if (all_on) std::swap(expect[n - 2], expect[n - 1]);
      if (std::abs(tt.cols[in][binary_label(expect)] - 1.0) > 1e-10 ||
          tt.leakage[in] > 1e-12) {
        detail = "fredkin mismatch at n=" + std::to_string(n);
        return false;
      }
    }
  }
  detail = "exhaustive permutation match, Toffoli n<=6 / Fredkin n<=5";
  return true;
}

// --- criterion 7: arithmetic ------------------------------------------------

bool criterion_arithmetic(std::string& detail) {
  for (int n = 1; n <= 4; ++n) {
    const std::uint64_t modulus = std::uint64_t{1} << n;
    const Circuit inc = synth_incrementer(n);
    for (std::uint64_t a = 0; a < modulus; ++a)
      if (digits_to_int(classical_output(inc, int_to_digits(n, a))) !=
          ((a + 1) % modulus)) {
        detail = "incrementer wrong at n=" + std::to_string(n);
        return false;
      }
    for (std::uint64_t b = 1; b < modulus; b += 2) {
      const Circuit cadd = synth_const_adder(n, b);
      for (std::uint64_t a = 0; a < modulus; ++a)
        if (digits_to_int(classical_output(cadd, int_to_digits(n, a))) !=
            ((a + b) % modulus)) {
          detail = "const adder wrong at n=" + std::to_string(n) +
                   " b=" + std::to_string(b);
          return false;
        }
    }
    const Circuit adder = synth_adder(n);
    for (std::uint64_t a = 0; a < modulus; ++a)
      for (std::uint64_t b = 0; b < modulus; ++b) {
        const auto out = classical_output(adder, adder_input(n, a, b));
        if (adder_output_a(out) != ((a + b) % modulus) ||
            adder_output_b(out) != b) {
          detail = "adder wrong at n=" + std::to_string(n);
          return false;
        }
      }
  }
  detail = "inc, all odd const adders and adder exact mod 2^n for n<=4";
  return true;
}

// --- criterion 8: ideal Grover ----------------------------------------------

bool criterion_ideal_grover(std::string& detail) {
  GroverSpec two{2, {2}, 1, std::nullopt, ConnectivityGraph::path(2)};
  const GroverRun exact = run_grover(two, 1000, 2024);
  if (exact.asp != 1.0) {
    detail = "n=2 M=1 ASP != 1";
    return false;
  }

  const double closed_form = std::pow(std::sin(3 * std::asin(0.25)), 2);
  if (std::abs(asp_model(4, 1, 1.0) - closed_form) > 1e-6) {
    detail = "model deviates from sin^2(3 asin 1/4)";
    return false;
  }

  GroverSpec four{4, {11}, 1, std::nullopt, ConnectivityGraph::path(4)};
  const std::uint64_t shots = 100000;
  const GroverRun sampled = run_grover(four, shots, 2025);
  const double sigma = std::sqrt(closed_form * (1 - closed_form) / shots);
  if (std::abs(sampled.asp - closed_form) > 3 * sigma) {
    detail = "sampled ASP outside 3 sigma";
    return false;
  }
  std::ostringstream note;
  note << "n=2 exact; n=4 analytic=" << std::setprecision(8) << closed_form
       << ", sampled=" << sampled.asp << " (3-sigma band " << 3 * sigma << ")";
  detail = note.str();
  return true;
}

// --- criterion 9: noisy model reproduction ----------------------------------

bool criterion_noisy_model(std::string& detail) {
  const std::uint64_t shots = 100000;
  double worst_pull = 0.0;
  for (int m = 1; m <= 10; ++m) {
    GroverSpec spec{4, {6}, m, 0.844, ConnectivityGraph::path(4)};
    const GroverRun result = run_grover(spec, shots, 31337 + m);
    const double expect = asp_model(4, m, 0.844);
    const double sigma = std::sqrt(expect * (1 - expect) / shots);
    const double pull = std::abs(result.asp - expect) / sigma;
    worst_pull = std::max(worst_pull, pull);
    if (pull > 3.0) {
      detail = "M=" + std::to_string(m) + " off by " + std::to_string(pull) +
               " sigma";
      return false;
    }
  }
  std::ostringstream note;
  note << "M=1..10 within 3 sigma (worst " << std::setprecision(3)
       << worst_pull << "); model at M=2 is " << std::setprecision(3)
       << asp_model(4, 2, 0.844)
       << " vs 0.468 measured on hardware (reported, not asserted)";
  detail = note.str();
  return true;
}

// --- criterion 10: fidelity fit ---------------------------------------------

bool criterion_fit(std::string& detail) {
  for (const double f : {0.3, 0.6, 0.844, 0.9}) {
    AspCurve exact;
    for (int m = 1; m <= 10; ++m)
      exact.points.push_back({m, asp_model(4, m, f), 0});
    const FidelityFit clean = fit_fidelity(exact, 4);
    if (std::abs(clean.fidelity - f) > 1e-3) {
      detail = "noiseless fit off at F=" + std::to_string(f);
      return false;
    }
    std::mt19937_64 rng(8080 + static_cast<std::uint64_t>(f * 1000));
    AspCurve noisy;
    for (int m = 1; m <= 10; ++m) {
      const double p = asp_model(4, m, f);
      std::binomial_distribution<int> binom(10000, p);
      noisy.points.push_back(
          {m, static_cast<double>(binom(rng)) / 10000.0, 10000});
    }
    const FidelityFit shot = fit_fidelity(noisy, 4);
    if (std::abs(shot.fidelity - f) > 0.01) {
      detail = "noisy fit off at F=" + std::to_string(f);
      return false;
    }
  }
  detail = "F in {0.3, 0.6, 0.844, 0.9} recovered (1e-3 clean, 0.01 noisy)";
  return true;
}

// --- criterion 11: multi-solution oracles -----------------------------------

bool criterion_multi_solution(std::string& detail) {
  const ConnectivityGraph g = ConnectivityGraph::path(4);
  struct Case {
    std::vector<std::uint64_t> encode;
    std::vector<std::uint64_t> flipped;
  };
  const std::vector<Case> cases{
      {{5, 5}, {}},             // double encoding cancels
      {{4, 8}, {4, 8}},         // two solutions
      {{1, 6, 11}, {1, 6, 11}}  // three solutions
  };
  for (const Case& c : cases) {
    const Circuit oracle = build_oracle(4, c.encode, g);
    const Matrix u = binary_unitary(oracle);
    for (std::size_t t = 0; t < 16; ++t)
      for (std::size_t s = 0; s < 16; ++s) {
        if (t != s) {
          if (std::abs(u[t][s]) > 1e-12) {
            detail = "oracle not diagonal";
            return false;
          }
          continue;
        }
        const bool flip = std::find(c.flipped.begin(), c.flipped.end(), s) !=
                          c.flipped.end();
        if (std::abs(u[s][s] - Amplitude{flip ? -1.0 : 1.0, 0.0}) > 1e-12) {
          detail = "diagonal wrong at label " + std::to_string(s);
          return false;
        }
      }
  }
  detail = "double encoding = identity; 2- and 3-solution diagonals exact";
  return true;
}

// --- criterion 12: ancilla baseline and comparison table ---------------------

bool criterion_baseline(std::string& detail) {
  for (int c = 2; c <= 5; ++c) {
    const NcDecomposition nc = nc_ancilla_decomposition(c);
    if (nc.ancilla_count != c - 2) {
      detail = "ancilla count wrong at c=" + std::to_string(c);
      return false;
    }
    const int wires = static_cast<int>(nc.circuit.wire_count());
    for (std::uint64_t controls = 0; controls < (std::uint64_t{1} << c);
         ++controls)
      for (int target_in = 0; target_in <= 1; ++target_in) {
        std::vector<int> input(wires, 0);
        for (int w = 0; w < c; ++w)
          input[w] = static_cast<int>((controls >> (c - 1 - w)) & 1);
        input[c] = target_in;
        const auto out = classical_output(nc.circuit, input);
        const bool all_on = controls == (std::uint64_t{1} << c) - 1;
        for (int w = 0; w < c; ++w)
          if (out[w] != input[w]) {
            detail = "control corrupted at c=" + std::to_string(c);
            return false;
          }
        if (out[c] != (all_on ? 1 - target_in : target_in)) {
          detail = "target wrong at c=" + std::to_string(c);
          return false;
        }
        for (int w = c + 1; w < wires; ++w)
          if (out[w] != 0) {
            detail = "ancilla not returned to 0 at c=" + std::to_string(c);
            return false;
          }
      }
  }
  for (int n = 2; n <= 10; ++n) {
    for (const Topology topo : {Topology::Chain, Topology::AllToAll}) {
      const auto rows = comparison_table(n, topo);
      for (const DecompositionRow& row : rows) {
        if (row.scheme == "quand") {
          if (row.size_formula != "n" || row.constant != "2" ||
              row.ancilla_value != 0.0 || *row.measured_size != 2 * n - 3) {
            detail = "quand row off at n=" + std::to_string(n);
            return false;
          }
          const char* want_depth =
              topo == Topology::Chain ? "n" : "log2 n";
          if (row.depth_formula != want_depth) {
            detail = "quand depth class off";
            return false;
          }
        }
        if (row.scheme == "nielsen-chuang") {
          if (row.ancilla_value != double(n - 2) ||
              *row.measured_ancillas != n - 2 ||
              *row.measured_size != 2 * n - 3) {
            detail = "nielsen-chuang row off at n=" + std::to_string(n);
            return false;
          }
        }
      }
    }
  }
  detail = "REF_MCX match with clean ancillas, c<=5; table classes n=2..10";
  return true;
}

// --- criterion 13: SPAM and T1 ----------------------------------------------

bool criterion_spam_t1(std::string& detail) {
  const ConfusionMatrix r =
      ConfusionMatrix::make({{0.97, 0.10}, {0.03, 0.90}});
  const std::vector<double> p{0.3, 0.7};
  const std::vector<double> raw{0.97 * 0.3 + 0.10 * 0.7,
                                0.03 * 0.3 + 0.90 * 0.7};
  const SpamResult corrected = spam_correct(r, raw);
  if (std::abs(corrected.corrected[0] - 0.3) > 1e-10 ||
      std::abs(corrected.corrected[1] - 0.7) > 1e-10) {
    detail = "SPAM round trip off";
    return false;
  }
  const ConfusionMatrix identity = ConfusionMatrix::make({{1, 0}, {0, 1}});
  const SpamResult same = spam_correct(identity, {0.25, 0.75});
  if (std::abs(same.corrected[0] - 0.25) > 1e-10) {
    detail = "identity correction off";
    return false;
  }

  if (std::abs(t1_fidelity({{0.0, {true, true}, {1e-5, 1e-5}}}) - 1.0) >
      1e-12) {
    detail = "zero-duration T1 fidelity != 1";
    return false;
  }
  if (std::abs(t1_fidelity({{1e-5, {true}, {1e-5}}}) - std::exp(-1.0)) >
      1e-12) {
    detail = "single-T1 segment off";
    return false;
  }
  const T1Segment four{1e-6, {true, true, true, true},
                       {1e-5, 1e-5, 1e-5, 1e-5}};
  if (std::abs(t1_fidelity({four}) - std::exp(-0.4)) > 1e-12) {
    detail = "four-wire product off";
    return false;
  }
  detail = "SPAM round trip (1e-10) and T1 closed forms (1e-12)";
  return true;
}

struct Criterion {
  int id;
  const char* name;
  double budget_seconds;
  std::function<bool(std::string&)> run;
};

}  // namespace

int main() {
  const std::vector<Criterion> criteria{
      {1, "quand-truth-table", 1, criterion_quand_truth_table},
      {2, "quand-round-trip", 1, criterion_round_trip},
      {3, "chain-mcz", 30, criterion_chain_mcz},
      {4, "tree-mcz", 60, criterion_tree_mcz},
      {5, "embedding-semantics", 30, criterion_embedding},
      {6, "toffoli-fredkin", 60, criterion_toffoli_fredkin},
      {7, "arithmetic", 60, criterion_arithmetic},
      {8, "ideal-grover", 30, criterion_ideal_grover},
      {9, "noisy-asp-model", 300, criterion_noisy_model},
      {10, "fidelity-fit", 30, criterion_fit},
      {11, "multi-solution-oracles", 30, criterion_multi_solution},
      {12, "ancilla-baseline", 60, criterion_baseline},
      {13, "spam-t1", 1, criterion_spam_t1},
  };

  int failed = 0;
  for (const Criterion& criterion : criteria) {
    const auto start = std::chrono::steady_clock::now();
    std::string detail;
    bool ok = false;
    try {
      ok = criterion.run(detail);
    } catch (const std::exception& e) {
      detail = std::string("exception: ") + e.what();
    }
    const double seconds =
        std::chrono::duration<double>(std::chrono::steady_clock::now() - start)
            .count();
    if (ok && seconds > criterion.budget_seconds) {
      ok = false;
      detail += " [exceeded " + std::to_string(criterion.budget_seconds) +
                " s budget]";
    }
    std::cout << (ok ? "PASS" : "FAIL") << "  " << std::setw(2) << criterion.id
              << "  " << std::left << std::setw(24) << criterion.name
              << std::right << "  (" << std::fixed << std::setprecision(2)
              << seconds << " s)  " << detail << "\n"
              << std::defaultfloat;
    if (!ok) ++failed;
  }
  std::cout << (failed == 0 ? "ACCEPTANCE: all criteria passed"
                            : "ACCEPTANCE: " + std::to_string(failed) +
                                  " criteria FAILED")
            << "\n";
  return failed;
}
