// Copyright 2026 The ADAC Router Authors
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

#include <gtest/gtest.h>

#include <string>

#include "adac/io.hpp"
#include "adac/qasm.hpp"
#include "adac/route.hpp"
#include "fixtures.hpp"

namespace adac {
namespace {

std::size_t count_substr(const std::string& s, const std::string& needle) {
  std::size_t n = 0;
  for (auto p = s.find(needle); p != std::string::npos; p = s.find(needle, p + 1)) ++n;
  return n;
}

TEST(Qasm, ParsesTriangle) {
  const Circuit c = parse_qasm(
      "OPENQASM 2.0;\n"
      "include \"qelib1.inc\";\n"
      "qreg q[3];\n"
      "creg c[3];\n"
      "cx q[0],q[1];\n"
      "CX q[1], q[2];  // trailing comment\n"
      "cx q[0],q[2];\n"
      "measure q[0] -> c[0];\n");
  EXPECT_EQ(c, testing::triangle_circuit());
}

TEST(Qasm, SingleQubitGates) {
  const Circuit c = parse_qasm("OPENQASM 2.0;\nqreg q[2];\nh q[0];\n");
  ASSERT_EQ(c.size(), 1U);
  EXPECT_EQ(c[0].kind, GateKind::Single);
  EXPECT_EQ(c[0].label, "h");

  const Circuit p = parse_qasm(
      "OPENQASM 2.0;\nqreg q[2];\nrz( pi / 4 ) q[1];\nx q;\nbarrier q;\n"
      "gate foo a { x a; }\nu3(0.1,0.2,0.3) q[0];\n");
  ASSERT_EQ(p.size(), 4U);
  EXPECT_EQ(p[0].label, "rz(pi/4)");
  EXPECT_EQ(p[0].q0, 1U);
  EXPECT_EQ(p[1].label, "x");
  EXPECT_EQ(p[2].q0, 1U);
  EXPECT_EQ(p[3].label, "u3(0.1,0.2,0.3)");
}

TEST(Qasm, Errors) {
  try {
    parse_qasm("OPENQASM 2.0;\nqreg q[3];\nccx q[0],q[1],q[2];\n");
    FAIL() << "expected an error";
  } catch (const QasmError& e) {
    EXPECT_EQ(e.line(), 3U);
    EXPECT_NE(std::string(e.what()).find("unsupported gate"), std::string::npos);
  }
  try {
    parse_qasm("OPENQASM 2.0;\nqreg q[2];\n\n  cx q[0],q[5];\n");
    FAIL() << "expected an error";
  } catch (const QasmError& e) {
    EXPECT_EQ(e.line(), 4U);
    EXPECT_EQ(e.column(), 3U);
  }
  EXPECT_THROW(parse_qasm("OPENQASM 2.0;\ncx q[0],q[1];\n"), QasmError);
  EXPECT_THROW(parse_qasm("OPENQASM 2.0;\nqreg q[2];\ncx q[0],q[1]\n"), QasmError);
  EXPECT_THROW(parse_qasm("OPENQASM 2.0;\nqreg q[2];\nqreg r[2];\n"), QasmError);
  EXPECT_THROW(parse_qasm("OPENQASM 3.0;\n"), QasmError);
  EXPECT_THROW(parse_qasm("OPENQASM 2.0;\nqreg q[2];\ncx q[1],q[1];\n"), QasmError);
  EXPECT_THROW(parse_qasm("OPENQASM 2.0;\nqreg q[2];\ncrz(0.1) q[0],q[1];\n"),
               QasmError);
  EXPECT_THROW(parse_qasm("OPENQASM 2.0;\nqreg q[2];\nif(c==1) x q[0];\n"),
               QasmError);
}

TEST(Qasm, EmitRoutedTriangle) {
  const Circuit lc = testing::triangle_circuit();
  const ArchGraph l3 = ArchGraph::line(3);
  const RoutedCircuit rc = adac(lc, l3);
  const std::string text = emit_qasm(rc);
  EXPECT_EQ(count_substr(text, "swap q["), 1U);
  EXPECT_EQ(count_substr(text, "cx q["), 3U);
  const std::string expanded = emit_qasm(rc, true);
  EXPECT_EQ(count_substr(expanded, "swap"), 0U);
  EXPECT_EQ(count_substr(expanded, "cx q["), 6U);
  EXPECT_EQ(parse_qasm(text), rc.physical);
}

TEST(Qasm, EmptyCircuitIsHeaderOnly) {
  EXPECT_EQ(emit_qasm(Circuit()), "OPENQASM 2.0;\ninclude \"qelib1.inc\";\n");
  EXPECT_EQ(parse_qasm(emit_qasm(Circuit(3))).num_qubits(), 3U);
}

TEST(Qasm, RoundTrip) {
  Circuit c = testing::four_qubit_example();
  c.add_swap(3, 0);
  c.add_single("rz(0.25)", 2);
  EXPECT_EQ(parse_qasm(emit_qasm(c)), c);
}

TEST(Io, ArchJson) {
  const ArchGraph g = ArchGraph::grid(2, 3);
  const ArchGraph back = arch_from_json(arch_to_json(g));
  EXPECT_EQ(back.edges(), g.edges());
  EXPECT_THROW(arch_from_json(nlohmann::json{{"n", 3}}), std::invalid_argument);
  EXPECT_THROW(arch_from_json(nlohmann::json{{"n", 3}, {"edges", {{0, 5}}}}),
               std::invalid_argument);
  EXPECT_EQ(load_arch("tokyo").num_vertices(), 20U);
  EXPECT_THROW(load_arch("no-such-device"), std::invalid_argument);
}

TEST(Io, Placement) {
  const Mapping m = Mapping::from_vector({4, 0, 2}, 5);
  EXPECT_EQ(placement_to_json(m), nlohmann::json({4, 0, 2}));
  EXPECT_EQ(placement_from_json(placement_to_json(m), 5), m);
  EXPECT_THROW(placement_from_json(nlohmann::json({1, 1}), 5), std::invalid_argument);
  EXPECT_THROW(placement_from_json(nlohmann::json({7}), 5), std::invalid_argument);
}

TEST(Io, RoutingReport) {
  const Circuit lc = testing::triangle_circuit();
  const RoutedCircuit rc = adac(lc, ArchGraph::line(3));
  const auto j = routing_report(rc, "tri.qasm", "line3", {}, 3, 1.5);
  EXPECT_EQ(j["swaps_added"], 1);
  EXPECT_EQ(j["router"], "adac");
  EXPECT_EQ(j["params"]["t_s"], 12);
  EXPECT_EQ(j["cnot_count"], 3);
  EXPECT_TRUE(j["divisions"].is_array());
  EXPECT_EQ(j["initial_placement"].size(), 3U);
  EXPECT_EQ(j["wall_time_ms"], 1.5);
}

}  // namespace
}  // namespace adac
