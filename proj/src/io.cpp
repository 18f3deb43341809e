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

#include "quand/io.hpp"

#include <fstream>
#include <sstream>
#include <stdexcept>

#include <json.hpp>

namespace quand {

namespace {
using nlohmann::json;
}

std::string circuit_to_text(const Circuit& circuit) {
  json doc;
  doc["wires"] = json::array();
  for (const Wire& wire : circuit.wires())
    doc["wires"].push_back({{"id", wire.id}, {"dim", wire.dim}});
  doc["ops"] = json::array();
  for (const Op& op : circuit.ops()) {
    json entry{{"gate", gate_name(op.kind)}, {"wires", op.wires}};
    if (op.kind == GateKind::Swap1120) entry["theta"] = op.theta;
    if (op.kind == GateKind::RY) entry["angle"] = op.angle;
    if (op.kind == GateKind::Phase) {
      entry["angle"] = op.angle;
      entry["level"] = op.level;
    }
    doc["ops"].push_back(entry);
  }
  doc["label"] = circuit.label() == CircuitLabel::Synthesized ? "synthesized"
                                                              : "reference";
  if (!circuit.macro_boundaries().empty())
    doc["macros"] = circuit.macro_boundaries();
  return doc.dump(2) + "\n";
}

Circuit circuit_from_text(const std::string& text) {
  json doc;
  try {
    doc = json::parse(text);
  } catch (const json::parse_error& e) {
    throw std::invalid_argument(std::string("circuit parse error: ") +
                                e.what());
  }
  if (!doc.contains("wires") || !doc["wires"].is_array())
    throw std::invalid_argument("circuit file: missing wires array");

  std::vector<int> dims;
  for (const json& wire : doc["wires"]) {
    const int id = wire.at("id").get<int>();
    if (id != static_cast<int>(dims.size()))
      throw std::invalid_argument("circuit file: wire ids must be 0..n-1");
    dims.push_back(wire.at("dim").get<int>());
  }

  CircuitLabel label = CircuitLabel::Synthesized;
  if (doc.contains("label")) {
    const std::string text_label = doc["label"].get<std::string>();
    if (text_label == "synthesized")
      label = CircuitLabel::Synthesized;
    else if (text_label == "reference")
      label = CircuitLabel::Reference;
    else
      throw std::invalid_argument("circuit file: unknown label " + text_label);
  } else if (doc.contains("ops")) {
    for (const json& op : doc["ops"])
      if (is_ref_gate(gate_from_name(op.at("gate").get<std::string>())))
        label = CircuitLabel::Reference;
  }

  Circuit circuit = Circuit::make(dims, label);
  if (doc.contains("ops")) {
    for (const json& entry : doc["ops"]) {
      Op op;
      op.kind = gate_from_name(entry.at("gate").get<std::string>());
      op.wires = entry.at("wires").get<std::vector<int>>();
      if (entry.contains("theta")) op.theta = entry["theta"].get<double>();
      if (entry.contains("angle")) op.angle = entry["angle"].get<double>();
      if (entry.contains("level")) op.level = entry["level"].get<int>();
      circuit.push(op);
    }
  }
  if (doc.contains("macros")) {
    const auto macros = doc["macros"].get<std::vector<std::size_t>>();
    for (std::size_t i = 0; i < macros.size(); ++i) {
      if (macros[i] > circuit.ops().size())
        throw std::invalid_argument("circuit file: macro boundary out of range");
      if (i > 0 && macros[i] < macros[i - 1])
        throw std::invalid_argument("circuit file: macro boundaries not sorted");
    }
    // Rebuild with the boundaries interleaved at their op positions.
    Circuit rebuilt = Circuit::make(dims, label);
    std::size_t next = 0;
    for (std::size_t i = 0; i <= circuit.ops().size(); ++i) {
      while (next < macros.size() && macros[next] == i) {
        rebuilt.mark_macro();
        ++next;
      }
      if (i < circuit.ops().size()) rebuilt.push(circuit.ops()[i]);
    }
    return rebuilt;
  }
  return circuit;
}

std::string read_text_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw std::runtime_error("cannot open " + path);
  std::ostringstream buffer;
  buffer << in.rdbuf();
  return buffer.str();
}

void write_text_file(const std::string& path, const std::string& text) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw std::runtime_error("cannot write " + path);
  out << text;
}

void write_circuit_file(const std::string& path, const Circuit& circuit) {
  write_text_file(path, circuit_to_text(circuit));
}

Circuit read_circuit_file(const std::string& path) {
  return circuit_from_text(read_text_file(path));
}

ConnectivityGraph graph_from_text(const std::string& text) {
  std::istringstream in(text);
  std::string line;
  std::vector<std::pair<int, int>> edges;
  int max_vertex = -1;
  int line_no = 0;
  while (std::getline(in, line)) {
    ++line_no;
    const auto hash = line.find('#');
    if (hash != std::string::npos) line = line.substr(0, hash);
    std::istringstream fields(line);
    int u, v;
    if (!(fields >> u)) continue;  // blank or comment-only line
    if (!(fields >> v))
      throw std::invalid_argument("graph file line " + std::to_string(line_no) +
                                  ": expected \"u v\"");
    std::string extra;
    if (fields >> extra)
      throw std::invalid_argument("graph file line " + std::to_string(line_no) +
                                  ": trailing tokens");
    edges.emplace_back(u, v);
    max_vertex = std::max({max_vertex, u, v});
  }
  if (edges.empty())
    throw std::invalid_argument("graph file: no edges");
  return ConnectivityGraph::make(max_vertex + 1, std::move(edges));
}

ConnectivityGraph read_graph_file(const std::string& path) {
  return graph_from_text(read_text_file(path));
}

ConfusionMatrix confusion_from_text(const std::string& text) {
  json doc;
  try {
    doc = json::parse(text);
  } catch (const json::parse_error& e) {
    throw std::invalid_argument(std::string("confusion parse error: ") +
                                e.what());
  }
  if (!doc.contains("r") || !doc["r"].is_array())
    throw std::invalid_argument("confusion file: missing \"r\" matrix");
  return ConfusionMatrix::make(
      doc["r"].get<std::vector<std::vector<double>>>());
}

ConfusionMatrix read_confusion_file(const std::string& path) {
  return confusion_from_text(read_text_file(path));
}

std::string confusion_to_text(const ConfusionMatrix& matrix) {
  json doc;
  doc["r"] = matrix.r;
  return doc.dump(2) + "\n";
}

std::string truth_table_to_tsv(const TruthTable& table) {
  std::ostringstream out;
  out << "# basis: labels read w0 w1 ... w" << (table.n - 1)
      << " with wire 0 as the most significant digit\n";
  out << "input";
  for (std::size_t t = 0; t < table.cols.size(); ++t)
    out << "\tp(" << t << ")";
  out << "\tleakage\n";
  out.precision(12);
  for (std::size_t s = 0; s < table.cols.size(); ++s) {
    out << s;
    for (double p : table.cols[s]) out << "\t" << p;
    out << "\t" << table.leakage[s] << "\n";
  }
  return out.str();
}

}  // namespace quand
