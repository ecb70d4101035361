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

#include <algorithm>
#include <numeric>

#include "adac/bench.hpp"
#include "adac/routed.hpp"
#include "adac/sabre.hpp"
#include "adac/verify.hpp"
#include "fixtures.hpp"

namespace adac {
namespace {

RoutedCircuit assemble_half(const Circuit& c, const ArchGraph& ag,
                            const RoutedHalf& h) {
  return assemble(c, ag, h.initial_mapping, h.divisions);
}

TEST(SabreRoute, ExecutableCircuitNeedsNoSwaps) {
  const Circuit c = testing::ising_chain(5, 2);
  const RoutedHalf h = sabre_route(c, Mapping::trivial(5, 5), ArchGraph::line(5));
  EXPECT_EQ(h.swap_count(), 0U);
  EXPECT_EQ(h.final_mapping, Mapping::trivial(5, 5));
}

TEST(SabreRoute, TriangleNeedsOneSwap) {
  const Circuit c = testing::triangle_circuit();
  const ArchGraph l3 = ArchGraph::line(3);
  const RoutedHalf h = sabre_route(c, Mapping::trivial(3, 3), l3);
  EXPECT_EQ(h.swap_count(), 1U);
  EXPECT_TRUE(check_equivalence(c, assemble_half(c, l3, h), l3));
}

TEST(SabreRoute, TriangleHasNoFreeSchedule) {
  // No placement of the triangle on line(3) is swap-free, and when the first
  // gate starts on the ends of the line two SWAPs are unavoidable.
  const Circuit c = testing::triangle_circuit();
  const ArchGraph l3 = ArchGraph::line(3);
  std::vector<Vertex> p{0, 1, 2};
  do {
    const RoutedHalf h = sabre_route(c, Mapping::from_vector(p, 3), l3);
    const bool first_gate_apart = l3.dist(p[0], p[1]) > 0;
    EXPECT_EQ(h.swap_count(), first_gate_apart ? 2U : 1U);
  } while (std::next_permutation(p.begin(), p.end()));
}

TEST(SabreRoute, LongDistanceGate) {
  const ArchGraph l8 = ArchGraph::line(8);
  Circuit c(8);
  c.add_cnot(0, 7);
  const RoutedHalf h = sabre_route(c, Mapping::trivial(8, 8), l8);
  EXPECT_EQ(h.swap_count(), 6U);  // diameter - 1
}

TEST(SabreRoute, UnplacedQubitThrows) {
  Circuit c(2);
  c.add_cnot(0, 1);
  Mapping m(2, 3);
  m.place(0, 0);
  EXPECT_THROW(sabre_route(c, m, ArchGraph::line(3)), std::invalid_argument);
}

TEST(SabreRoute, TrialsAreReproducible) {
  const Circuit c = generate_pseudo_realistic({12, 4, 6, 3}).circuit;
  const ArchGraph g = ArchGraph::grid(3, 4);
  for (std::size_t t = 0; t < 3; ++t) {
    const RoutedHalf a = sabre_route(c, Mapping::trivial(12, 12), g, {}, t);
    const RoutedHalf b = sabre_route(c, Mapping::trivial(12, 12), g, {}, t);
    EXPECT_EQ(a.final_mapping, b.final_mapping);
    EXPECT_EQ(a.swap_count(), b.swap_count());
  }
}

TEST(ReverseTraversal, ExecutableCircuitKeepsTrivialPlacement) {
  const Circuit c = testing::ising_chain(4, 1);
  const auto [beg, fin] = reverse_traversal_mapping(c, ArchGraph::line(4), 1);
  EXPECT_EQ(beg, Mapping::trivial(4, 4));
  EXPECT_EQ(fin, Mapping::trivial(4, 4));
}

TEST(ReverseTraversal, TriangleStartIsGood) {
  const Circuit c = testing::triangle_circuit();
  const ArchGraph l3 = ArchGraph::line(3);
  const auto [beg, fin] = reverse_traversal_mapping(c, l3, 3);
  EXPECT_TRUE(beg.is_total());
  EXPECT_TRUE(fin.is_total());
  EXPECT_LE(sabre_route(c, beg, l3).swap_count(), 1U);
}

TEST(ReverseTraversal, ZeroRoundsThrows) {
  EXPECT_THROW(reverse_traversal_mapping(testing::triangle_circuit(),
                                         ArchGraph::line(3), 0),
               std::invalid_argument);
}

TEST(Sabre, BestOfTrialsIsEquivalent) {
  const ArchGraph g = ArchGraph::grid(4, 5);
  for (std::uint64_t seed = 0; seed < 10; ++seed) {
    const Circuit c = generate_pseudo_realistic({16, 4, 8, seed}).circuit;
    const RoutedCircuit rc = sabre(c, g);
    EXPECT_EQ(rc.router, "sabre");
    EXPECT_TRUE(check_executability(rc, g));
    const auto r = check_equivalence_report(c, rc, g);
    EXPECT_TRUE(r.ok()) << r.message;

    SabreParams one;
    one.trials = 1;
    EXPECT_LE(rc.swap_count, sabre(c, g, one).swap_count);
  }
}

}  // namespace
}  // namespace adac
