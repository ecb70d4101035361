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
#include "adac/embed.hpp"

namespace adac {

/// Split of a circuit into a prefix, an embeddable middle and a suffix.
/// Each part lists gate positions in ascending order.
struct Division {
  std::vector<std::size_t> pre;
  std::vector<std::size_t> mid;
  std::vector<std::size_t> post;
  /// Position of the two-qubit gate the middle part was grown from.
  std::size_t start = 0;

  [[nodiscard]] std::size_t mid_two_qubit(const Circuit& c) const;
};

/// Initial circuit division.
///
/// For every two-qubit start gate s (in order), grows a gate set from s over
/// the dependency DAG of the suffix beginning at s: the front layer is
/// scanned in ascending position and a gate is absorbed when the grown
/// interaction graph stays embeddable in `ag`; passes repeat until one
/// absorbs nothing. The largest grown set (by two-qubit gates, earliest start
/// on ties) becomes `mid`; gates before the start form `pre`, the rest
/// `post`. Single-qubit gates follow the nearest earlier two-qubit gate on
/// their qubit (or the next one when there is none).
Division max_subgraph_division(const Circuit& c, const ArchGraph& ag,
                               std::size_t budget = kDefaultMatchBudget);

/// Checks the partition, embeddability and per-qubit-order invariants.
/// Returns a description of the first violation, or nullopt.
std::optional<std::string> check_division(const Circuit& c,
                                          const ArchGraph& ag,
                                          const Division& d);

/// Gates of `c` at the listed positions, renumbered densely.
Circuit subcircuit(const Circuit& c, const std::vector<std::size_t>& positions);

}  // namespace adac
