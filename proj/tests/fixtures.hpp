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

#include <string>

#include "adac/arch.hpp"
#include "adac/circuit.hpp"
#include "adac/mapping.hpp"

namespace adac::testing {

// g0 <q2,q0>, g1 <q3>, g2 <q0,q1>, g3 <q2,q3>, g4 <q0>, g5 <q2,q1>, g6 <q1,q3>
inline Circuit four_qubit_example() {
  Circuit c(4);
  c.add_cnot(2, 0);
  c.add_single("h", 3);
  c.add_cnot(0, 1);
  c.add_cnot(2, 3);
  c.add_single("t", 0);
  c.add_cnot(2, 1);
  c.add_cnot(1, 3);
  return c;
}

// Three CNOTs on a triangle of qubits; the last needs one SWAP on line(3).
inline Circuit triangle_circuit() {
  Circuit c(3);
  c.add_cnot(0, 1);
  c.add_cnot(1, 2);
  c.add_cnot(0, 2);
  return c;
}

// Mapping pair related by SWAP(2,5) then SWAP(4,7) on a 3x3 grid.
inline Mapping swap_example_before() {
  return Mapping::from_vector({1, 2, 7, 4}, 9);
}
inline Mapping swap_example_after() {
  return Mapping::from_vector({1, 5, 4, 7}, 9);
}

// Nearest-neighbour chain Ising evolution: per step, cx-rz-cx on every
// chain link.
inline Circuit ising_chain(std::size_t n, std::size_t steps) {
  Circuit c(n);
  for (std::size_t s = 0; s < steps; ++s) {
    for (Qubit q = 0; q + 1 < n; ++q) {
      c.add_cnot(q, q + 1);
      c.add_single("rz(0.1)", q + 1);
      c.add_cnot(q, q + 1);
    }
  }
  return c;
}

}  // namespace adac::testing
