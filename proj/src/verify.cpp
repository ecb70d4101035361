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

#include "adac/verify.hpp"

#include <algorithm>
#include <cstring>
#include <limits>
#include <stdexcept>
#include <string>
#include <unordered_map>
#include <unordered_set>

#include "adac/embed.hpp"

namespace adac {

bool check_executability(const Circuit& physical, const ArchGraph& ag) {
  for (const Gate& g : physical) {
    if (!g.is_two_qubit()) continue;
    if (g.q0 >= ag.num_vertices() || g.q1 >= ag.num_vertices()) return false;
    if (!ag.is_edge(g.q0, g.q1)) return false;
  }
  return true;
}

namespace {

using Word = std::uint64_t;

// Bit-sliced input words for inputs base .. base+63: word q holds bit q of
// each input.
std::vector<Word> input_words(std::size_t n, std::uint64_t base) {
  std::vector<Word> w(n, 0);
  for (std::size_t i = 0; i < 64; ++i) {
    const std::uint64_t x = base + i;
    for (std::size_t q = 0; q < n; ++q) {
      if ((x >> q) & 1U) w[q] |= Word{1} << i;
    }
  }
  return w;
}

void apply_gates(const Circuit& c, std::vector<Word>& w) {
  for (const Gate& g : c) {
    if (g.kind == GateKind::Cnot) {
      w[g.q1] ^= w[g.q0];
    } else if (g.kind == GateKind::Swap) {
      std::swap(w[g.q0], w[g.q1]);
    }
  }
}

std::string key_of(const std::vector<Qubit>& occ) {
  std::string k(occ.size() * sizeof(Qubit), '\0');
  std::memcpy(k.data(), occ.data(), k.size());
  return k;
}

}  // namespace

std::vector<std::uint32_t> basis_permutation(const Circuit& c) {
  const std::size_t n = c.num_qubits();
  if (n > kPermutationCheckQubits) {
    throw std::invalid_argument("basis permutation limited to 16 qubits");
  }
  const std::size_t states = std::size_t{1} << n;
  std::vector<std::uint32_t> out(states, 0);
  for (std::uint64_t base = 0; base < states; base += 64) {
    std::vector<Word> w = input_words(n, base);
    apply_gates(c, w);
    const std::size_t count = std::min<std::size_t>(64, states - base);
    for (std::size_t i = 0; i < count; ++i) {
      std::uint32_t y = 0;
      for (std::size_t q = 0; q < n; ++q) {
        if ((w[q] >> i) & 1U) y |= std::uint32_t{1} << q;
      }
      out[base + i] = y;
    }
  }
  return out;
}

EquivalenceReport check_equivalence_report(const Circuit& lc_in,
                                           const Circuit& physical,
                                           const Mapping& initial,
                                           const ArchGraph& ag) {
  EquivalenceReport rep;
  const Circuit lc = lc_in.count(GateKind::Swap) > 0 ? lower_swaps(lc_in) : lc_in;
  const std::size_t n = lc.num_qubits();
  const std::size_t V = ag.num_vertices();
  auto fail = [&](std::string msg) {
    rep.message = std::move(msg);
    return rep;
  };
  if (initial.num_qubits() != n || initial.num_vertices() != V) {
    return fail("initial placement has the wrong shape");
  }
  for (Qubit q = 0; q < n; ++q) {
    if (!initial.placed(q)) {
      return fail("initial placement leaves qubit " + std::to_string(q) +
                  " unplaced");
    }
  }
  if (physical.num_qubits() > V) return fail("physical circuit is wider than the device");

  std::vector<std::vector<std::size_t>> tracks(n);
  for (std::size_t pos = 0; pos < lc.size(); ++pos) {
    tracks[lc[pos].q0].push_back(pos);
    if (lc[pos].is_two_qubit()) tracks[lc[pos].q1].push_back(pos);
  }
  std::vector<std::size_t> next(n, 0);
  auto expect = [&](Qubit q) -> std::optional<std::size_t> {
    if (next[q] >= tracks[q].size()) return std::nullopt;
    return tracks[q][next[q]];
  };

  Mapping m = initial;
  for (std::size_t i = 0; i < physical.size(); ++i) {
    const Gate& g = physical[i];
    const std::string where = "physical gate " + std::to_string(i) + " (" +
                              to_string(g) + ")";
    if (g.kind == GateKind::Swap) {
      m.swap_vertices(g.q0, g.q1);
      continue;
    }
    const Qubit a = m.logical(g.q0);
    if (a == kNoQubit) return fail(where + " acts on an unoccupied vertex");
    if (g.kind == GateKind::Single) {
      const auto want = expect(a);
      if (!want || lc[*want].kind != GateKind::Single ||
          lc[*want].label != g.label) {
        return fail(where + " does not match the next gate on qubit " +
                    std::to_string(a));
      }
      ++next[a];
      continue;
    }
    const Qubit b = m.logical(g.q1);
    if (b == kNoQubit) return fail(where + " acts on an unoccupied vertex");
    const auto wa = expect(a);
    const auto wb = expect(b);
    if (!wa || !wb || *wa != *wb || lc[*wa].kind != GateKind::Cnot ||
        lc[*wa].q0 != a || lc[*wa].q1 != b) {
      return fail(where + " does not match the next logical gate on qubits " +
                  std::to_string(a) + "," + std::to_string(b));
    }
    ++next[a];
    ++next[b];
  }
  for (Qubit q = 0; q < n; ++q) {
    if (next[q] != tracks[q].size()) {
      return fail("qubit " + std::to_string(q) + " is missing " +
                  std::to_string(tracks[q].size() - next[q]) + " gates");
    }
  }
  rep.order_ok = true;

  if (n > kPermutationCheckQubits || V > 64) {
    rep.message = "permutation check skipped: " + std::to_string(n) +
                  " qubits on " + std::to_string(V) + " vertices";
    return rep;
  }
  rep.permutation_checked = true;
  const Mapping& final_map = m;
  const std::vector<std::uint32_t> expected = basis_permutation(lc);
  const std::size_t states = std::size_t{1} << n;
  for (std::uint64_t base = 0; base < states; base += 64) {
    const std::vector<Word> in = input_words(n, base);
    std::vector<Word> w(V, 0);
    for (Qubit q = 0; q < n; ++q) w[initial.physical(q)] = in[q];
    apply_gates(physical, w);
    const std::size_t count = std::min<std::size_t>(64, states - base);
    const Word live = count == 64 ? ~Word{0} : ((Word{1} << count) - 1);
    for (Vertex v = 0; v < V; ++v) {
      if (!final_map.occupied(v) && (w[v] & live) != 0) {
        return fail("unused vertex " + std::to_string(v) +
                    " does not return to |0>");
      }
    }
    for (std::size_t i = 0; i < count; ++i) {
      std::uint32_t y = 0;
      for (Qubit q = 0; q < n; ++q) {
        if ((w[final_map.physical(q)] >> i) & 1U) y |= std::uint32_t{1} << q;
      }
      if (y != expected[base + i]) {
        return fail("basis state " + std::to_string(base + i) +
                    " maps to the wrong output");
      }
    }
  }
  rep.permutation_ok = true;
  return rep;
}

std::optional<std::size_t> exact_token_swap_distance(const Mapping& m1,
                                                     const Mapping& m2,
                                                     const ArchGraph& ag,
                                                     std::size_t cap) {
  if (m1.num_qubits() != m2.num_qubits()) {
    throw std::invalid_argument("mappings cover different qubit counts");
  }
  std::vector<std::pair<Qubit, Vertex>> goal;
  for (Qubit q = 0; q < m2.num_qubits(); ++q) {
    if (!m2.placed(q)) continue;
    if (!m1.placed(q)) {
      throw std::invalid_argument("qubit " + std::to_string(q) +
                                  " is placed only by the target mapping");
    }
    goal.emplace_back(q, m2.physical(q));
  }
  auto reached = [&](const std::vector<Qubit>& occ) {
    for (auto [q, v] : goal) {
      if (occ[v] != q) return false;
    }
    return true;
  };

  std::vector<Qubit> start = m1.inverse();
  if (reached(start)) return 0;
  std::unordered_set<std::string> seen{key_of(start)};
  std::vector<std::vector<Qubit>> layer{start};
  for (std::size_t depth = 1; depth <= cap && !layer.empty(); ++depth) {
    std::vector<std::vector<Qubit>> next_layer;
    for (const auto& occ : layer) {
      for (auto [u, v] : ag.edges()) {
        if (occ[u] == kNoQubit && occ[v] == kNoQubit) continue;
        std::vector<Qubit> child = occ;
        std::swap(child[u], child[v]);
        if (!seen.insert(key_of(child)).second) continue;
        if (reached(child)) return depth;
        next_layer.push_back(std::move(child));
      }
    }
    layer = std::move(next_layer);
  }
  return std::nullopt;
}

std::optional<std::size_t> exact_mapping_to_graph_distance(
    const Mapping& m, const InteractionGraph& ig, const ArchGraph& ag,
    std::size_t cap) {
  const std::vector<Qubit> nodes = ig.nodes();
  for (Qubit q : nodes) {
    if (!m.placed(q)) {
      throw std::invalid_argument("qubit " + std::to_string(q) +
                                  " is not placed");
    }
  }
  if (nodes.empty()) return 0;
  const std::vector<Mapping> embeddings =
      enumerate_embeddings(ig, ag, std::numeric_limits<std::size_t>::max());
  if (embeddings.empty()) return std::nullopt;

  auto node_key = [&](auto&& vertex_of) {
    std::string k;
    for (Qubit q : nodes) k.push_back(static_cast<char>(vertex_of(q)));
    return k;
  };
  std::unordered_set<std::string> targets;
  for (const Mapping& e : embeddings) {
    targets.insert(node_key([&](Qubit q) { return e.physical(q); }));
  }
  // Other qubits never block a SWAP, so the state is the IG-node positions.
  std::vector<Vertex> start;
  for (Qubit q : nodes) start.push_back(m.physical(q));
  auto key = [](const std::vector<Vertex>& pos) {
    return std::string(pos.begin(), pos.end());
  };
  if (targets.count(key(start))) return 0;
  std::unordered_set<std::string> seen{key(start)};
  std::vector<std::vector<Vertex>> layer{start};
  std::vector<int> slot(ag.num_vertices(), -1);
  for (std::size_t depth = 1; depth <= cap && !layer.empty(); ++depth) {
    std::vector<std::vector<Vertex>> next_layer;
    for (const auto& pos : layer) {
      for (std::size_t i = 0; i < pos.size(); ++i) slot[pos[i]] = static_cast<int>(i);
      for (auto [u, v] : ag.edges()) {
        if (slot[u] < 0 && slot[v] < 0) continue;
        std::vector<Vertex> child = pos;
        if (slot[u] >= 0) child[slot[u]] = v;
        if (slot[v] >= 0) child[slot[v]] = u;
        const std::string k = key(child);
        if (!seen.insert(k).second) continue;
        if (targets.count(k)) {
          for (Vertex w : pos) slot[w] = -1;
          return depth;
        }
        next_layer.push_back(std::move(child));
      }
      for (Vertex w : pos) slot[w] = -1;
    }
    layer = std::move(next_layer);
  }
  return std::nullopt;
}

}  // namespace adac
