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

#pragma once

// Brute-force reference implementations used only by tests.

#include <algorithm>
#include <cstdint>
#include <deque>
#include <map>
#include <optional>
#include <set>
#include <vector>

#include "adac/arch.hpp"
#include "adac/circuit.hpp"
#include "adac/mapping.hpp"

namespace adac::testing {

// Every injection of the IG nodes into AG vertices that preserves edges,
// in lexicographic order of the placement vector.
inline std::vector<std::vector<Vertex>> brute_force_embeddings(
    const InteractionGraph& ig, const ArchGraph& ag) {
  const std::vector<Qubit> nodes = ig.nodes();
  std::vector<std::vector<Vertex>> out;
  std::vector<Vertex> place(nodes.size());
  std::vector<bool> used(ag.num_vertices(), false);
  auto rec = [&](auto&& self, std::size_t i) -> void {
    if (i == nodes.size()) {
      for (auto [a, b] : ig.edges()) {
        const auto ia = std::find(nodes.begin(), nodes.end(), a) - nodes.begin();
        const auto ib = std::find(nodes.begin(), nodes.end(), b) - nodes.begin();
        if (!ag.is_edge(place[ia], place[ib])) return;
      }
      out.push_back(place);
      return;
    }
    for (Vertex v = 0; v < ag.num_vertices(); ++v) {
      if (used[v]) continue;
      used[v] = true;
      place[i] = v;
      self(self, i + 1);
      used[v] = false;
    }
  };
  rec(rec, 0);
  return out;
}

// Minimum SWAPs until every gate of `gates` is executable, by plain BFS over
// full occupancy vectors with every AG edge as a move.
inline std::optional<std::size_t> brute_force_swap_distance(
    const std::vector<Gate>& gates, const Mapping& m, const ArchGraph& ag,
    std::size_t cap) {
  auto done = [&](const std::vector<Qubit>& inv) {
    std::vector<Vertex> fwd(m.num_qubits(), kNoVertex);
    for (Vertex v = 0; v < inv.size(); ++v) {
      if (inv[v] != kNoQubit) fwd[inv[v]] = v;
    }
    for (const Gate& g : gates) {
      if (!ag.is_edge(fwd[g.q0], fwd[g.q1])) return false;
    }
    return true;
  };
  std::map<std::vector<Qubit>, std::size_t> seen;
  std::deque<std::vector<Qubit>> queue{m.inverse()};
  seen[m.inverse()] = 0;
  while (!queue.empty()) {
    auto cur = queue.front();
    queue.pop_front();
    const std::size_t d = seen[cur];
    if (done(cur)) return d;
    if (d == cap) continue;
    for (auto [u, v] : ag.edges()) {
      auto next = cur;
      std::swap(next[u], next[v]);
      if (seen.emplace(next, d + 1).second) queue.push_back(next);
    }
  }
  return std::nullopt;
}

// Random spanning tree on `n` vertices plus up to `extra` further edges.
template <class Rng>
ArchGraph random_connected_graph(Rng& rng, std::size_t n, std::size_t extra) {
  std::set<Edge> edges;
  for (Vertex v = 1; v < n; ++v) {
    const Vertex u = static_cast<Vertex>(rng() % v);
    edges.emplace(u, v);
  }
  for (std::size_t i = 0; i < extra; ++i) {
    Vertex a = static_cast<Vertex>(rng() % n);
    Vertex b = static_cast<Vertex>(rng() % n);
    if (a == b) continue;
    edges.emplace(std::min(a, b), std::max(a, b));
  }
  return ArchGraph(n, {edges.begin(), edges.end()});
}

// Random mapping of `n` qubits onto distinct vertices.
template <class Rng>
Mapping random_mapping(Rng& rng, std::size_t n, std::size_t vertices) {
  std::vector<Vertex> all(vertices);
  for (Vertex v = 0; v < vertices; ++v) all[v] = v;
  for (std::size_t i = vertices; i > 1; --i) std::swap(all[i - 1], all[rng() % i]);
  all.resize(n);
  return Mapping::from_vector(all, vertices);
}

}  // namespace adac::testing
