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

#include <doctest.h>


#include "quand/arithmetic.hpp"
#include "quand/grover.hpp"
#include "quand/io.hpp"
#include "quand/synthesis.hpp"

using namespace quand;

TEST_CASE("circuit files round-trip") {
  Circuit c = Circuit::make({3, 2, 2});
  c.h(1);
  c.ry(2, 0.25);
  c.phase(0, 2, -1.5);
  c.extend(quand_ops(0, 1, 0.75));
  c.cz(1, 2);
  c.cnot(2, 1);
  c.mark_macro();
  CHECK(circuit_from_text(circuit_to_text(c)) == c);

  // Synthesized and reference artifacts round-trip exactly too.
  for (const Circuit& artifact :
       {synth_mcz_tree(ConnectivityGraph::cycle(8)).circuit,
        synth_adder(3),
        grover_circuit(
            {3, {5}, 2, std::nullopt, ConnectivityGraph::path(3)})}) {
    CHECK(circuit_from_text(circuit_to_text(artifact)) == artifact);
  }

  Circuit ref = Circuit::make({2, 2, 2}, CircuitLabel::Reference);
  ref.ref_mcz({0, 1, 2});
  CHECK(circuit_from_text(circuit_to_text(ref)) == ref);
}

TEST_CASE("circuit parsing rejects malformed input") {
  CHECK_THROWS_AS(circuit_from_text("not json"), std::invalid_argument);
  CHECK_THROWS_AS(circuit_from_text("{}"), std::invalid_argument);
  CHECK_THROWS_AS(
      circuit_from_text(R"({"wires":[{"id":0,"dim":4}],"ops":[]})"),
      std::invalid_argument);
  CHECK_THROWS_AS(
      circuit_from_text(R"({"wires":[{"id":1,"dim":2}],"ops":[]})"),
      std::invalid_argument);
  CHECK_THROWS_AS(
      circuit_from_text(
          R"({"wires":[{"id":0,"dim":2}],"ops":[{"gate":"BOGUS","wires":[0]}]})"),
      std::invalid_argument);
  // SWAP1120 with a dim-2 child violates the gate contract at parse time.
  CHECK_THROWS_AS(
      circuit_from_text(
          R"({"wires":[{"id":0,"dim":2},{"id":1,"dim":2}],)"
          R"("ops":[{"gate":"SWAP1120","wires":[0,1],"theta":0.0}]})"),
      std::invalid_argument);
}

TEST_CASE("label inference for files without one") {
  const Circuit plain = circuit_from_text(
      R"({"wires":[{"id":0,"dim":2},{"id":1,"dim":2}],)"
      R"("ops":[{"gate":"CZ","wires":[0,1]}]})");
  CHECK(plain.label() == CircuitLabel::Synthesized);

  const Circuit ref = circuit_from_text(
      R"({"wires":[{"id":0,"dim":2},{"id":1,"dim":2}],)"
      R"("ops":[{"gate":"REF_MCZ","wires":[0,1]}]})");
  CHECK(ref.label() == CircuitLabel::Reference);
}

TEST_CASE("graph files") {
  const ConnectivityGraph g = graph_from_text(
      "# a ring of four\n"
      "0 1\n"
      "1 2\n"
      "2 3  # wraps next\n"
      "3 0\n"
      "\n");
  CHECK(g.vertex_count() == 4);
  CHECK(g.edges().size() == 4);
  CHECK(g.has_edge(3, 0));

  CHECK_THROWS_AS(graph_from_text(""), std::invalid_argument);
  CHECK_THROWS_AS(graph_from_text("0\n"), std::invalid_argument);
  CHECK_THROWS_AS(graph_from_text("0 1 2\n"), std::invalid_argument);
  CHECK_THROWS_AS(graph_from_text("0 0\n"), std::invalid_argument);
}

TEST_CASE("confusion matrix files") {
  const ConfusionMatrix r = confusion_from_text(
      R"({"r": [[0.97, 0.10], [0.03, 0.90]]})");
  CHECK(r.size() == 2);
  CHECK(r.r[0][1] == doctest::Approx(0.10));
  CHECK(confusion_from_text(confusion_to_text(r)).r == r.r);

  CHECK_THROWS_AS(confusion_from_text("{}"), std::invalid_argument);
  // Columns must be stochastic.
  CHECK_THROWS_AS(confusion_from_text(R"({"r": [[0.9, 0.1], [0.3, 0.9]]})"),
                  std::invalid_argument);
  CHECK_THROWS_AS(confusion_from_text(R"({"r": [[1.0, 0.0]]})"),
                  std::invalid_argument);
}

TEST_CASE("truth table text includes the basis convention") {
  Circuit c = Circuit::make({2, 2});
  c.cnot(0, 1);
  const std::string tsv = truth_table_to_tsv(truth_table(c));
  CHECK(tsv.find("# basis") != std::string::npos);
  CHECK(tsv.find("most significant") != std::string::npos);
  CHECK(tsv.find("leakage") != std::string::npos);
  // One header comment, one column header, four data rows.
  std::size_t lines = 0;
  for (char ch : tsv)
    if (ch == '\n') ++lines;
  CHECK(lines == 6);
}
