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

#include <cstddef>
#include <optional>
#include <string>
#include <vector>

#include "adac/arch.hpp"
#include "adac/circuit.hpp"
#include "adac/divide.hpp"
#include "adac/mapping.hpp"

namespace adac {

/// SWAPs on AG edges, applied in order.
using SwapSeq = std::vector<Edge>;

/// A division of a routed half: SWAPs applied first, then `gates` (positions
/// in the routed circuit, single-qubit gates included) in order.
struct RoutedDivision {
  std::vector<std::size_t> gates;
  SwapSeq swaps;
};

struct RoutedHalf {
  std::vector<RoutedDivision> divisions;
  Mapping initial_mapping;
  Mapping final_mapping;
  /// Steps that needed the doubled SWAP threshold.
  std::size_t fallbacks = 0;

  [[nodiscard]] std::size_t swap_count() const;
};

/// Per-division bookkeeping of a routed circuit.
struct DivisionSummary {
  std::string part;       ///< "pre", "mid", "post" or "all"
  std::size_t gates = 0;  ///< two-qubit gates
  std::size_t swaps = 0;
};

struct RoutedCircuit {
  std::string router;
  std::size_t num_logical = 0;
  /// Mapping at the start of the physical circuit.
  Mapping initial_placement;
  Mapping final_placement;
  /// Over the device vertices; inserted SWAPs are `GateKind::Swap`.
  Circuit physical;
  std::size_t swap_count = 0;
  std::vector<DivisionSummary> divisions;
  std::optional<Division> initial_division;
  std::size_t fallbacks = 0;
};

/// Replays `steps` (SWAPs, then gates given as positions in `lc`) from
/// `initial` and emits the physical circuit. Division summaries are tagged
/// with `part`.
RoutedCircuit assemble(const Circuit& lc, const ArchGraph& ag,
                       const Mapping& initial,
                       const std::vector<RoutedDivision>& steps,
                       const std::string& part = "all");

/// Logical circuit with SWAPs lowered and a qubit count check against `ag`.
/// Throws std::invalid_argument when the circuit has more qubits than `ag`.
Circuit prepare_logical(const Circuit& lc, const ArchGraph& ag);

}  // namespace adac
