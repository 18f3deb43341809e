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

// quandc: synthesis, simulation, search and benchmark front end.
//
// Exit codes: 0 success, 1 verification failure, 2 input error.
// All randomness derives from --seed; identical invocations produce
// byte-identical outputs.

#include <CLI11.hpp>
#include <cmath>
#include <fstream>
#include <iomanip>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include "quand/analysis.hpp"
#include "quand/arithmetic.hpp"
#include "quand/grover.hpp"
#include "quand/io.hpp"
#include "quand/statevector.hpp"
#include "quand/synthesis.hpp"

namespace {

constexpr const char* kVersion = "0.1.0";
constexpr int kExitOk = 0;
constexpr int kExitVerificationFailure = 1;
constexpr int kExitInputError = 2;

std::string metadata_header(const std::vector<std::string>& argv,
                            std::optional<std::uint64_t> seed) {
  std::ostringstream out;
  out << "# cmd:";
  for (const std::string& arg : argv) out << " " << arg;
  out << "\n";
  if (seed) out << "# seed: " << *seed << "\n";
  out << "# version: " << kVersion << "\n";
  return out.str();
}

void emit(const std::string& path, const std::string& text) {
  if (path.empty())
    std::cout << text;
  else
    quand::write_text_file(path, text);
}

std::vector<std::uint64_t> parse_solutions(const std::string& csv, int n) {
  std::vector<std::uint64_t> labels;
  std::istringstream in(csv);
  std::string token;
  while (std::getline(in, token, ',')) {
    if (token.empty()) continue;
    if (static_cast<int>(token.size()) != n)
      throw std::invalid_argument("solution '" + token + "' is not " +
                                  std::to_string(n) + " bits");
    std::uint64_t label = 0;
    for (char c : token) {
      if (c != '0' && c != '1')
        throw std::invalid_argument("solution '" + token +
                                    "' contains non-binary digits");
      label = (label << 1) | static_cast<std::uint64_t>(c - '0');
    }
    labels.push_back(label);
  }
  if (labels.empty()) throw std::invalid_argument("no solutions given");
  return labels;
}

std::vector<int> parse_bits(const std::string& text) {
  std::vector<int> digits;
  for (char c : text) {
    if (c < '0' || c > '2')
      throw std::invalid_argument("input label must use digits 0/1/2");
    digits.push_back(c - '0');
  }
  return digits;
}

std::pair<int, int> parse_edge(const std::string& text) {
  const auto comma = text.find(',');
  if (comma == std::string::npos)
    throw std::invalid_argument("expected \"u,v\"");
  return {std::stoi(text.substr(0, comma)), std::stoi(text.substr(comma + 1))};
}

std::pair<int, int> parse_range(const std::string& text) {
  const auto dots = text.find("..");
  if (dots == std::string::npos) {
    const int n = std::stoi(text);
    return {n, n};
  }
  return {std::stoi(text.substr(0, dots)), std::stoi(text.substr(dots + 2))};
}

std::string format_double(double value) {
  std::ostringstream out;
  out << std::setprecision(10) << value;
  return out.str();
}

std::string label_string(const std::vector<int>& digits) {
  std::string s;
  for (int d : digits) s.push_back(static_cast<char>('0' + d));
  return s;
}

// ---------------------------------------------------------------------------

int cmd_synth(const std::vector<std::string>& argv, const std::string& gate,
              const std::string& graph_path, const std::string& out_path,
              const std::string& roots, int target, int target2,
              const std::string& mode) {
  const quand::ConnectivityGraph graph = quand::read_graph_file(graph_path);
  std::optional<std::pair<int, int>> root_override;
  if (!roots.empty()) root_override = parse_edge(roots);

  const int last = graph.vertex_count() - 1;
  const int t1 = target >= 0 ? target : last;

  quand::Synthesis synthesis;
  if (gate == "mcz") {
    synthesis = quand::synth_mcz_tree(graph, root_override);
  } else if (gate == "toffoli") {
    synthesis = quand::synth_toffoli(graph, t1);
  } else if (gate == "fredkin") {
    const int t0 = target2 >= 0 ? target2 : t1 - 1;
    synthesis = quand::synth_fredkin(graph, {t0, t1});
  } else if (gate == "mcu") {
    std::vector<int> targets{t1};
    quand::TargetUnitary u = quand::TargetUnitary::X;
    if (mode == "z")
      u = quand::TargetUnitary::Z;
    else if (mode == "swap") {
      u = quand::TargetUnitary::Swap;
      targets = {target2 >= 0 ? target2 : t1 - 1, t1};
    } else if (!mode.empty() && mode != "x") {
      throw std::invalid_argument("mcu mode must be z, x or swap");
    }
    std::vector<int> controls;
    for (int v = 0; v <= last; ++v)
      if (std::find(targets.begin(), targets.end(), v) == targets.end())
        controls.push_back(v);
    synthesis = quand::synth_mcu(graph, controls, u, targets);
  } else {
    throw std::invalid_argument("unknown gate " + gate);
  }

  quand::write_circuit_file(out_path, synthesis.circuit);
  std::ostringstream plan;
  plan << metadata_header(argv, std::nullopt);
  quand::write_plan_sidecar(plan, synthesis);
  quand::write_text_file(out_path + ".plan", plan.str());

  const quand::GateCounts counts = synthesis.circuit.gate_count();
  std::cout << "gates=" << counts.multi_wire << " depth="
            << synthesis.circuit.depth(quand::DepthMode::MultiWireOnly)
            << " height=" << synthesis.plan.tree_height
            << " wires=" << synthesis.circuit.wire_count() << "\n";
  return kExitOk;
}

int cmd_sim(const std::vector<std::string>& argv,
            const std::string& circuit_path, const std::string& mode,
            const std::string& input, std::uint64_t shots, std::uint64_t seed,
            const std::string& ref_path, const std::string& spam_path,
            const std::string& out_path) {
  const quand::Circuit circuit = quand::read_circuit_file(circuit_path);
  const std::size_t n = circuit.wire_count();

  if (mode == "truthtable") {
    std::string text = metadata_header(argv, std::nullopt);
    text += quand::truth_table_to_tsv(quand::truth_table(circuit));
    emit(out_path, text);
    return kExitOk;
  }

  std::vector<int> digits(n, 0);
  if (!input.empty()) {
    digits = parse_bits(input);
    if (digits.size() != n)
      throw std::invalid_argument("input label length does not match wires");
  }

  if (mode == "run") {
    const quand::StateVector state = quand::run(circuit, digits);
    std::ostringstream out;
    out << metadata_header(argv, std::nullopt);
    out << "# basis: labels read w0 w1 ... with wire 0 as the most "
           "significant digit\n";
    out << "label\tre\tim\tprob\n";
    for (std::size_t i = 0; i < state.amps.size(); ++i) {
      if (std::abs(state.amps[i]) < 1e-14) continue;
      out << label_string(quand::state_digits(state.dims, i)) << "\t"
          << format_double(state.amps[i].real()) << "\t"
          << format_double(state.amps[i].imag()) << "\t"
          << format_double(std::norm(state.amps[i])) << "\n";
    }
    emit(out_path, out.str());
    return kExitOk;
  }

  if (mode == "sample") {
    const quand::StateVector state = quand::run(circuit, digits);
    const auto counts = quand::sample(state, shots, seed);
    std::ostringstream out;
    out << metadata_header(argv, seed);
    if (spam_path.empty()) {
      out << "label\tcount\n";
      for (const auto& [index, count] : counts)
        out << label_string(quand::state_digits(state.dims, index)) << "\t"
            << count << "\n";
    } else {
      // Readout correction over the 2^n binary labels.
      const quand::ConfusionMatrix r = quand::read_confusion_file(spam_path);
      const std::size_t labels = std::size_t{1} << n;
      if (r.size() != labels)
        throw std::invalid_argument("confusion matrix size does not match 2^n");
      std::vector<double> raw(labels, 0.0);
      for (const auto& [index, count] : counts)
        raw[quand::binary_label(quand::state_digits(state.dims, index))] +=
            static_cast<double>(count) / static_cast<double>(shots);
      const quand::SpamResult corrected = quand::spam_correct(r, raw);
      out << "# spam: condition=" << format_double(corrected.condition)
          << " negative_mass=" << format_double(corrected.negative_mass)
          << "\n";
      out << "label\traw\tcorrected\n";
      for (std::size_t i = 0; i < labels; ++i)
        out << label_string(quand::binary_digits(n, i)) << "\t"
            << format_double(raw[i]) << "\t"
            << format_double(corrected.corrected[i]) << "\n";
    }
    emit(out_path, out.str());
    return kExitOk;
  }

  if (mode == "equiv") {
    if (ref_path.empty())
      throw std::invalid_argument("--ref is required for --mode equiv");
    const quand::Circuit reference = quand::read_circuit_file(ref_path);
    const quand::EquivResult eq =
        quand::unitary_equiv(circuit, reference, 1e-10);
    std::cout << "overlap=" << format_double(eq.overlap)
              << " equivalent=" << (eq.equivalent ? "yes" : "no") << "\n";
    return eq.equivalent ? kExitOk : kExitVerificationFailure;
  }

  throw std::invalid_argument("unknown sim mode " + mode);
}

int cmd_grover(const std::vector<std::string>& argv, int n,
               const std::string& solutions_csv, int cycles,
               std::optional<double> fidelity, std::uint64_t shots,
               std::uint64_t seed, const std::string& graph_path,
               const std::string& out_prefix) {
  const quand::ConnectivityGraph graph =
      graph_path.empty() ? quand::ConnectivityGraph::path(n)
                         : quand::read_graph_file(graph_path);
  std::optional<std::vector<std::uint64_t>> solutions;
  if (!solutions_csv.empty()) solutions = parse_solutions(solutions_csv, n);

  // ASP table: one row per cycle count up to --cycles.
  std::ostringstream asp;
  asp << metadata_header(argv, seed);
  asp << "M\tasp\tstderr\n";
  for (int m = 1; m <= cycles; ++m) {
    double value = 0.0, err = 0.0;
    if (solutions) {
      const quand::GroverRun result =
          quand::run_grover({n, *solutions, m, fidelity, graph}, shots,
                            quand::derive_seed(seed, m));
      value = result.asp;
      err = result.std_err;
    } else {
      const quand::GroverMatrix matrix = quand::run_grover_all_solutions(
          n, m, fidelity, graph, shots, quand::derive_seed(seed, m));
      value = matrix.average_asp;
      err = std::sqrt(value * (1.0 - value) /
                      (static_cast<double>(shots) * (1u << n)));
    }
    asp << m << "\t" << format_double(value) << "\t" << format_double(err)
        << "\n";
  }

  // Distribution matrix at M = cycles: encoded solution rows vs outcomes.
  // With an explicit solution set the whole set is run together and its
  // distribution fills the encoded rows; otherwise every label is encoded
  // alone (one run per row).
  const std::size_t labels = std::size_t{1} << n;
  std::vector<std::vector<double>> rows(labels,
                                        std::vector<double>(labels, 0.0));
  if (solutions) {
    const quand::GroverRun result =
        quand::run_grover({n, *solutions, cycles, fidelity, graph}, shots,
                          quand::derive_seed(seed, 0));
    for (std::uint64_t j : *solutions) rows[j] = result.distribution;
  } else {
    const quand::GroverMatrix matrix = quand::run_grover_all_solutions(
        n, cycles, fidelity, graph, shots, quand::derive_seed(seed, 0));
    rows = matrix.rows;
  }
  std::ostringstream mat;
  mat << metadata_header(argv, seed);
  mat << "# rows: encoded solution, columns: measured outcome\n";
  for (std::uint64_t j = 0; j < labels; ++j) {
    mat << label_string(quand::binary_digits(n, j));
    for (double p : rows[j]) mat << "\t" << format_double(p);
    mat << "\n";
  }

  if (out_prefix.empty()) {
    std::cout << asp.str();
  } else {
    quand::write_text_file(out_prefix + ".asp.tsv", asp.str());
    quand::write_text_file(out_prefix + ".matrix.tsv", mat.str());
  }
  return kExitOk;
}

int cmd_arith(const std::vector<std::string>& argv, const std::string& gate,
              int n, std::uint64_t b, bool verify,
              const std::string& out_path) {
  quand::Circuit circuit;
  if (gate == "inc")
    circuit = quand::synth_incrementer(n);
  else if (gate == "cadd")
    circuit = quand::synth_const_adder(n, b);
  else if (gate == "add")
    circuit = quand::synth_adder(n);
  else
    throw std::invalid_argument("unknown arithmetic gate " + gate);

  if (!out_path.empty()) quand::write_circuit_file(out_path, circuit);

  const quand::GateCounts counts = circuit.gate_count();
  std::cout << "gates=" << counts.multi_wire
            << " depth=" << circuit.depth(quand::DepthMode::MultiWireOnly)
            << " wires=" << circuit.wire_count() << "\n";

  if (!verify) return kExitOk;
  if (n > 6) throw std::invalid_argument("verification supports n <= 6");

  std::ostringstream report;
  report << metadata_header(argv, std::nullopt);
  report << "input\texpected\tgot\tpass\n";
  bool all_pass = true;
  const std::uint64_t modulus = std::uint64_t{1} << n;
  auto record = [&](const std::string& in, std::uint64_t expect,
                    std::uint64_t got) {
    const bool pass = expect == got;
    all_pass = all_pass && pass;
    report << in << "\t" << expect << "\t" << got << "\t"
           << (pass ? "yes" : "no") << "\n";
  };
  if (gate == "add") {
    for (std::uint64_t a = 0; a < modulus; ++a)
      for (std::uint64_t bb = 0; bb < modulus; ++bb) {
        const auto out =
            quand::classical_output(circuit, quand::adder_input(n, a, bb));
        record("a=" + std::to_string(a) + ",b=" + std::to_string(bb),
               (a + bb) % modulus, quand::adder_output_a(out));
      }
  } else {
    const std::uint64_t step = (gate == "inc") ? 1 : b;
    for (std::uint64_t a = 0; a < modulus; ++a) {
      const auto out =
          quand::classical_output(circuit, quand::int_to_digits(n, a));
      record("a=" + std::to_string(a), (a + step) % modulus,
             quand::digits_to_int(out));
    }
  }
  emit(out_path.empty() ? "" : out_path + ".verify.tsv", report.str());
  return all_pass ? kExitOk : kExitVerificationFailure;
}

int cmd_bench(const std::vector<std::string>& argv, const std::string& range,
              const std::string& topology, const std::string& out_path) {
  const auto [lo, hi] = parse_range(range);
  if (lo < 2 || hi < lo) throw std::invalid_argument("bad n range");
  if (topology != "chain" && topology != "all_to_all")
    throw std::invalid_argument("topology must be chain or all_to_all");
  const quand::Topology topo = topology == "all_to_all"
                                   ? quand::Topology::AllToAll
                                   : quand::Topology::Chain;

  std::ostringstream out;
  out << metadata_header(argv, std::nullopt);
  out << "topology\tn\tscheme\tdepth\tdepth@n\tsize\tsize@n\tconstant"
         "\tancilla\tancilla@n\tmeasured_size\tmeasured_depth"
         "\tmeasured_ancilla\tcontrol\n";
  for (int n = lo; n <= hi; ++n) {
    for (const quand::DecompositionRow& row :
         quand::comparison_table(n, topo)) {
      out << topology << "\t" << n << "\t" << row.scheme << "\t"
          << row.depth_formula << "\t" << format_double(row.depth_value)
          << "\t" << row.size_formula << "\t" << format_double(row.size_value)
          << "\t" << row.constant << "\t" << row.ancilla_formula << "\t"
          << format_double(row.ancilla_value) << "\t";
      if (row.measured_size)
        out << *row.measured_size;
      else
        out << "-";
      out << "\t";
      if (row.measured_depth)
        out << *row.measured_depth;
      else
        out << "-";
      out << "\t";
      if (row.measured_ancillas)
        out << *row.measured_ancillas;
      else
        out << "-";
      out << "\t" << row.control_requirement << "\n";
    }
  }
  emit(out_path, out.str());
  return kExitOk;
}

int cmd_fit(const std::string& curve_path, int n) {
  const std::string text = quand::read_text_file(curve_path);
  std::istringstream in(text);
  std::string line;
  quand::AspCurve curve;
  while (std::getline(in, line)) {
    const auto hash = line.find('#');
    if (hash != std::string::npos) line = line.substr(0, hash);
    std::istringstream fields(line);
    int m;
    double asp;
    if (!(fields >> m >> asp)) continue;
    std::uint64_t shots = 0;
    fields >> shots;
    curve.points.push_back({m, asp, shots});
  }
  const quand::FidelityFit fit = quand::fit_fidelity(curve, n);
  std::cout << "F=" << format_double(fit.fidelity);
  if (fit.flat_warning) std::cout << " warning=flat-likelihood";
  std::cout << "\n";
  return kExitOk;
}

}  // namespace

int main(int argc, char** argv) {
  std::vector<std::string> args(argv, argv + argc);

  CLI::App app{"quandc: QuAND-based circuit synthesis, simulation and search"};
  app.set_version_flag("--version", kVersion);
  app.require_subcommand(1);

  auto* synth =
      app.add_subcommand("synth", "synthesize a multiply controlled gate");
  std::string synth_gate = "mcz", synth_graph, synth_out = "circuit.json";
  std::string synth_roots, synth_mode;
  int synth_target = -1, synth_target2 = -1;
  synth->add_option("--gate", synth_gate, "mcz|toffoli|fredkin|mcu");
  synth->add_option("--graph", synth_graph, "connectivity graph file")
      ->required();
  synth->add_option("--out", synth_out, "output circuit file");
  synth->add_option("--roots", synth_roots, "root edge override u,v");
  synth->add_option("--target", synth_target, "target wire (default: last)");
  synth->add_option("--target2", synth_target2,
                    "second target wire (fredkin/swap)");
  synth->add_option("--mode", synth_mode, "mcu target unitary: z|x|swap");

  auto* sim = app.add_subcommand("sim", "simulate a circuit file");
  std::string sim_circuit, sim_mode = "truthtable", sim_input, sim_ref, sim_out;
  std::string sim_spam;
  std::uint64_t sim_shots = 1024, sim_seed = 12345;
  sim->add_option("--circuit", sim_circuit, "circuit file")->required();
  sim->add_option("--mode", sim_mode, "truthtable|run|sample|equiv");
  sim->add_option("--input", sim_input, "basis input label, e.g. 0110");
  sim->add_option("--shots", sim_shots, "samples for --mode sample");
  sim->add_option("--seed", sim_seed, "random seed");
  sim->add_option("--ref", sim_ref, "reference circuit for --mode equiv");
  sim->add_option("--spam", sim_spam,
                  "confusion-matrix file for readout correction");
  sim->add_option("--out", sim_out, "output file (default: stdout)");

  auto* grover = app.add_subcommand("grover", "run Grover's search");
  int grover_n = 0, grover_cycles = 1;
  std::string grover_solutions, grover_graph, grover_out;
  double grover_fidelity = -1.0;
  std::uint64_t grover_shots = 100000, grover_seed = 12345;
  grover->add_option("--n", grover_n, "qubit count")->required();
  grover->add_option("--solutions", grover_solutions,
                     "comma-separated bit-strings (default: average all)");
  grover->add_option("--cycles", grover_cycles, "amplification cycles");
  grover->add_option("--fidelity", grover_fidelity,
                     "per-n-CZ fidelity for the noise model");
  grover->add_option("--shots", grover_shots,
                     "shots or trajectories per point");
  grover->add_option("--seed", grover_seed, "random seed");
  grover->add_option("--graph", grover_graph, "graph file (default: chain)");
  grover->add_option("--out", grover_out,
                     "output prefix (.asp.tsv, .matrix.tsv)");

  auto* arith = app.add_subcommand("arith", "synthesize arithmetic circuits");
  std::string arith_gate, arith_out;
  int arith_n = 0;
  std::uint64_t arith_b = 1;
  bool arith_verify = false;
  arith->add_option("--gate", arith_gate, "inc|cadd|add")->required();
  arith->add_option("--n", arith_n, "register width in bits")->required();
  arith->add_option("--b", arith_b, "constant for cadd (odd)");
  arith->add_flag("--verify", arith_verify, "exhaustive verification report");
  arith->add_option("--out", arith_out, "output circuit file");

  auto* bench = app.add_subcommand("bench", "decomposition comparison table");
  std::string bench_n = "2..8", bench_topology = "chain", bench_out;
  bench->add_option("--n", bench_n, "size or range, e.g. 4 or 2..10");
  bench->add_option("--topology", bench_topology, "chain|all_to_all");
  bench->add_option("--out", bench_out, "output file (default: stdout)");

  auto* fit = app.add_subcommand("fit", "fit gate fidelity from an ASP curve");
  std::string fit_curve;
  int fit_n = 0;
  fit->add_option("--curve", fit_curve, "TSV file of M, asp rows")->required();
  fit->add_option("--n", fit_n, "qubit count of the search")->required();

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    if (e.get_exit_code() == 0) return app.exit(e);  // --help / --version
    app.exit(e);
    return kExitInputError;
  }

  try {
    if (synth->parsed())
      return cmd_synth(args, synth_gate, synth_graph, synth_out, synth_roots,
                       synth_target, synth_target2, synth_mode);
    if (sim->parsed())
      return cmd_sim(args, sim_circuit, sim_mode, sim_input, sim_shots,
                     sim_seed, sim_ref, sim_spam, sim_out);
    if (grover->parsed())
      return cmd_grover(args, grover_n, grover_solutions, grover_cycles,
                        grover_fidelity >= 0.0
                            ? std::optional<double>(grover_fidelity)
                            : std::nullopt,
                        grover_shots, grover_seed, grover_graph, grover_out);
    if (arith->parsed())
      return cmd_arith(args, arith_gate, arith_n, arith_b, arith_verify,
                       arith_out);
    if (bench->parsed()) return cmd_bench(args, bench_n, bench_topology,
                                          bench_out);
    if (fit->parsed()) return cmd_fit(fit_curve, fit_n);
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitInputError;
  }
  return kExitInputError;
}
