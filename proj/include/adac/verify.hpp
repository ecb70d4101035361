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
#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "adac/arch.hpp"
#include "adac/circuit.hpp"
#include "adac/mapping.hpp"
#include "adac/routed.hpp"

namespace adac {

/// Largest logical qubit count for the basis-permutation check.
inline constexpr std::size_t kPermutationCheckQubits = 16;

/// Every two-qubit physical gate (cnot or swap) acts on an edge of `ag`.
bool check_executability(const Circuit& physical, const ArchGraph& ag);
inline bool check_executability(const RoutedCircuit& rc, const ArchGraph& ag) {
  return check_executability(rc.physical, ag);
}

struct EquivalenceReport {
  bool order_ok = false;
  bool permutation_checked = false;
  bool permutation_ok = false;
  /// First problem found, or a note about a skipped check.
  std::string message;

  [[nodiscard]] bool ok() const {
    return order_ok && (!permutation_checked || permutation_ok);
  }
};

/// Replays `physical` from `initial` and checks that it realises `lc`:
/// (1) translated back to logical qubits, every qubit sees exactly lc's gate
/// sequence on that qubit, and each CNOT pairs up the same source gate on
/// both of its qubits; (2) for at most 16 logical qubits and 64 vertices, the
/// basis permutation of the CNOT/SWAP gates, read through the initial and
/// final mappings, equals lc's and leaves unused vertices at |0>.
/// Logical swap gates are compared through their three-CNOT expansion.
EquivalenceReport check_equivalence_report(const Circuit& lc,
                                           const Circuit& physical,
                                           const Mapping& initial,
                                           const ArchGraph& ag);
inline EquivalenceReport check_equivalence_report(const Circuit& lc,
                                                  const RoutedCircuit& rc,
                                                  const ArchGraph& ag) {
  return check_equivalence_report(lc, rc.physical, rc.initial_placement, ag);
}
inline bool check_equivalence(const Circuit& lc, const RoutedCircuit& rc,
                              const ArchGraph& ag) {
  return check_equivalence_report(lc, rc, ag).ok();
}

/// Image of every computational basis state under the CNOT and SWAP gates of
/// `c` (single-qubit gates are skipped). Bit q of an index is qubit q.
/// Throws std::invalid_argument above 16 qubits.
std::vector<std::uint32_t> basis_permutation(const Circuit& c);

/// Minimum number of SWAPs turning `m1` into `m2` (breadth-first over full
/// occupancy states), or nullopt when it exceeds `cap`. Qubits unplaced by
/// `m2` may end anywhere.
std::optional<std::size_t> exact_token_swap_distance(const Mapping& m1,
                                                     const Mapping& m2,
                                                     const ArchGraph& ag,
                                                     std::size_t cap);

/// Minimum number of SWAPs after which `m` embeds `ig`, or nullopt when no
/// embedding exists or the distance exceeds `cap`.
std::optional<std::size_t> exact_mapping_to_graph_distance(
    const Mapping& m, const InteractionGraph& ig, const ArchGraph& ag,
    std::size_t cap);

}  // namespace adac
