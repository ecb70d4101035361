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

#include <random>

#include "adac/route.hpp"
#include "fixtures.hpp"
#include "oracles.hpp"

namespace adac {
namespace {

std::vector<Gate> gates_of(const Circuit& c, std::vector<std::size_t> pos) {
  std::vector<Gate> out;
  for (std::size_t p : pos) out.push_back(c[p]);
  return out;
}

TEST(Cost, LineExamples) {
  const ArchGraph l3 = ArchGraph::line(3);
  const Mapping id = Mapping::trivial(3, 3);
  const Circuit c = testing::triangle_circuit();
  const auto last = gates_of(c, {2});
  EXPECT_EQ(cost({}, last, id, l3), 1U);
  EXPECT_EQ(cost({{1, 2}}, last, id, l3), 0U);
  EXPECT_EQ(cost({}, gates_of(c, {0, 1}), id, l3), 0U);
  EXPECT_EQ(cost({}, c.gates(), id, l3), 1U);
}

TEST(SwapSearch, TriangleLastGate) {
  const ArchGraph l3 = ArchGraph::line(3);
  const Circuit c = testing::triangle_circuit();
  const auto r = search_swaps(gates_of(c, {2}), Mapping::trivial(3, 3), l3, 12);
  ASSERT_TRUE(r.swaps);
  ASSERT_EQ(r.swaps->size(), 1U);
  // SWAP(0,1) and SWAP(1,2) both work; the lexicographic tie-break takes the
  // smaller edge.
  EXPECT_EQ(r.swaps->front(), (Edge{0, 1}));
  EXPECT_FALSE(r.budget_exhausted);
}

TEST(SwapSearch, WholeTriangleIsImpossible) {
  const Circuit c = testing::triangle_circuit();
  const auto r = search_swaps(c.gates(), Mapping::trivial(3, 3),
                              ArchGraph::line(3), 12);
  EXPECT_FALSE(r.swaps);
  EXPECT_EQ(r.extractions, 0U);
}

TEST(SwapSearch, AlreadyEmbedded) {
  const Circuit c = testing::ising_chain(5, 2);
  const auto s = heuristic_swaps(c.gates(), Mapping::trivial(5, 5),
                                 ArchGraph::line(5), 12);
  ASSERT_TRUE(s);
  EXPECT_TRUE(s->empty());
}

TEST(SwapSearch, ThresholdTooSmall) {
  const ArchGraph l20 = ArchGraph::line(20);
  Circuit c(20);
  c.add_cnot(0, 19);
  const Mapping id = Mapping::trivial(20, 20);
  EXPECT_FALSE(heuristic_swaps(c.gates(), id, l20, 3));
  const auto s = heuristic_swaps(c.gates(), id, l20, 18);
  ASSERT_TRUE(s);
  EXPECT_EQ(s->size(), 18U);
}

TEST(SwapSearch, ResultMakesGatesExecutable) {
  const ArchGraph g = ArchGraph::grid(3, 3);
  const Mapping before = testing::swap_example_before();
  Circuit c(4);
  c.add_cnot(0, 1);
  c.add_cnot(1, 3);
  c.add_cnot(2, 3);
  const auto s = heuristic_swaps(c.gates(), before, g, 12);
  ASSERT_TRUE(s);
  Mapping m = before;
  for (const Edge& e : *s) apply_swap_inplace(m, g, e);
  EXPECT_EQ(cost({}, c.gates(), m, g), 0U);
  EXPECT_EQ(cost(*s, c.gates(), before, g), 0U);
  const auto want = testing::brute_force_swap_distance(c.gates(), before, g, 12);
  ASSERT_TRUE(want);
  EXPECT_EQ(s->size(), *want);
}

TEST(SwapSearch, UnplacedQubitThrows) {
  Circuit c(2);
  c.add_cnot(0, 1);
  Mapping m(2, 3);
  m.place(0, 0);
  EXPECT_THROW(search_swaps(c.gates(), m, ArchGraph::line(3), 4),
               std::invalid_argument);
}

TEST(SwapSearch, MatchesBreadthFirstOracle) {
  std::mt19937_64 rng(2024);
  int compared = 0;
  for (int trial = 0; trial < 250; ++trial) {
    const std::size_t v = 4 + rng() % 4;
    const ArchGraph ag = testing::random_connected_graph(rng, v, rng() % 4);
    const std::size_t n = 2 + rng() % (v - 1);
    const Mapping m = testing::random_mapping(rng, n, v);
    Circuit c(n);
    const std::size_t k = 1 + rng() % 3;
    for (std::size_t i = 0; i < k; ++i) {
      const Qubit a = rng() % n;
      Qubit b = rng() % (n - 1);
      if (b >= a) ++b;
      c.add_cnot(a, b);
    }
    const std::size_t t_s = 6;
    const auto r = search_swaps(c.gates(), m, ag, t_s);
    ASSERT_FALSE(r.budget_exhausted);
    const auto want = testing::brute_force_swap_distance(c.gates(), m, ag, t_s);
    ASSERT_EQ(r.swaps.has_value(), want.has_value()) << "trial " << trial;
    if (want) {
      EXPECT_EQ(r.swaps->size(), *want) << "trial " << trial;
      EXPECT_EQ(cost(*r.swaps, c.gates(), m, ag), 0U);
      ++compared;
    }
  }
  EXPECT_GT(compared, 150);
}

}  // namespace
}  // namespace adac
