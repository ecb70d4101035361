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

#include "adac/mapping.hpp"

#include <algorithm>
#include <stdexcept>
#include <string>

namespace adac {

Mapping Mapping::trivial(std::size_t num_qubits, std::size_t num_vertices) {
  if (num_qubits > num_vertices) {
    throw std::invalid_argument("circuit has " + std::to_string(num_qubits) +
                                " qubits but the device only " +
                                std::to_string(num_vertices));
  }
  Mapping m(num_qubits, num_vertices);
  for (Qubit q = 0; q < num_qubits; ++q) m.place(q, q);
  return m;
}

Mapping Mapping::from_vector(const std::vector<Vertex>& placement,
                             std::size_t num_vertices) {
  Mapping m(placement.size(), num_vertices);
  for (Qubit q = 0; q < placement.size(); ++q) {
    const Vertex v = placement[q];
    if (v == kNoVertex) continue;
    if (v >= num_vertices) {
      throw std::invalid_argument("placement puts qubit " + std::to_string(q) +
                                  " on out-of-range vertex " +
                                  std::to_string(v));
    }
    if (m.occupied(v)) {
      throw std::invalid_argument("placement is not injective: vertex " +
                                  std::to_string(v) + " used twice");
    }
    m.place(q, v);
  }
  return m;
}

Vertex Mapping::at(Qubit q) const {
  if (!placed(q)) {
    throw std::out_of_range("logical qubit " + std::to_string(q) +
                            " is not placed");
  }
  return forward_[q];
}

void Mapping::place(Qubit q, Vertex v) {
  if (inverse_[v] != kNoQubit && inverse_[v] != q) {
    throw std::invalid_argument("vertex " + std::to_string(v) +
                                " already hosts qubit " +
                                std::to_string(inverse_[v]));
  }
  if (forward_[q] != kNoVertex) inverse_[forward_[q]] = kNoQubit;
  forward_[q] = v;
  inverse_[v] = q;
}

void Mapping::unplace(Qubit q) {
  if (forward_[q] == kNoVertex) return;
  inverse_[forward_[q]] = kNoQubit;
  forward_[q] = kNoVertex;
}

void Mapping::swap_vertices(Vertex a, Vertex b) {
  const Qubit qa = inverse_[a];
  const Qubit qb = inverse_[b];
  inverse_[a] = qb;
  inverse_[b] = qa;
  if (qa != kNoQubit) forward_[qa] = b;
  if (qb != kNoQubit) forward_[qb] = a;
}

std::size_t Mapping::num_placed() const {
  return static_cast<std::size_t>(std::count_if(
      forward_.begin(), forward_.end(),
      [](Vertex v) { return v != kNoVertex; }));
}

Mapping Mapping::restricted_to(const std::vector<Qubit>& qubits) const {
  Mapping out(num_qubits(), num_vertices());
  for (Qubit q : qubits) {
    if (placed(q)) out.place(q, forward_[q]);
  }
  return out;
}

void apply_swap_inplace(Mapping& m, const ArchGraph& ag, Edge e) {
  if (e.first >= ag.num_vertices() || e.second >= ag.num_vertices() ||
      !ag.is_edge(e.first, e.second)) {
    throw std::invalid_argument("SWAP(" + std::to_string(e.first) + "," +
                                std::to_string(e.second) +
                                ") is not on an architecture edge");
  }
  m.swap_vertices(e.first, e.second);
}

Mapping apply_swap(Mapping m, const ArchGraph& ag, Edge e) {
  apply_swap_inplace(m, ag, e);
  return m;
}

std::uint32_t swap_distance_lower_bound(const ArchGraph& ag, const Gate& g,
                                        const Mapping& m) {
  if (!g.is_two_qubit()) {
    throw std::invalid_argument("swap distance needs a two-qubit gate");
  }
  if (!m.placed(g.q0) || !m.placed(g.q1)) {
    throw std::invalid_argument("gate '" + to_string(g) +
                                "' has an unplaced qubit");
  }
  return ag.dist(m.physical(g.q0), m.physical(g.q1));
}

}  // namespace adac
