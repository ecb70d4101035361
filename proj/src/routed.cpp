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

#include "adac/routed.hpp"

#include <stdexcept>
#include <string>

namespace adac {

std::size_t RoutedHalf::swap_count() const {
  std::size_t total = 0;
  for (const RoutedDivision& d : divisions) total += d.swaps.size();
  return total;
}

RoutedCircuit assemble(const Circuit& lc, const ArchGraph& ag,
                       const Mapping& initial,
                       const std::vector<RoutedDivision>& steps,
                       const std::string& part) {
  RoutedCircuit out;
  out.num_logical = lc.num_qubits();
  out.initial_placement = initial;
  out.physical = Circuit(ag.num_vertices());
  Mapping m = initial;
  for (const RoutedDivision& step : steps) {
    for (const Edge& e : step.swaps) {
      apply_swap_inplace(m, ag, e);
      out.physical.add_swap(e.first, e.second);
    }
    std::size_t two_qubit = 0;
    for (std::size_t pos : step.gates) {
      const Gate& g = lc[pos];
      switch (g.kind) {
        case GateKind::Single:
          out.physical.add_single(g.label, m.at(g.q0));
          break;
        case GateKind::Cnot:
          out.physical.add_cnot(m.at(g.q0), m.at(g.q1));
          ++two_qubit;
          break;
        case GateKind::Swap:
          throw std::invalid_argument(
              "logical circuit still contains a swap at position " +
              std::to_string(pos));
      }
    }
    out.swap_count += step.swaps.size();
    out.divisions.push_back({part, two_qubit, step.swaps.size()});
  }
  out.final_placement = m;
  return out;
}

Circuit prepare_logical(const Circuit& lc, const ArchGraph& ag) {
  if (lc.num_qubits() > ag.num_vertices()) {
    throw std::invalid_argument(
        "circuit has " + std::to_string(lc.num_qubits()) +
        " qubits but the device only " + std::to_string(ag.num_vertices()));
  }
  if (lc.count(GateKind::Swap) > 0) return lower_swaps(lc);
  return lc;
}

}  // namespace adac
