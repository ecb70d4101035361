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
#include <span>
#include <stdexcept>
#include <string>
#include <vector>

#include "adac/arch.hpp"
#include "adac/circuit.hpp"
#include "adac/divide.hpp"
#include "adac/embed.hpp"
#include "adac/mapping.hpp"
#include "adac/routed.hpp"
#include "adac/sabre.hpp"

namespace adac {

/// Default cap on pool extractions in the SWAP search.
inline constexpr std::size_t kDefaultSwapBudget = 100'000;

struct AdacParams {
  std::size_t t_ini = 3;  ///< reverse-traversal rounds for the anchor mapping
  std::size_t t_s = 12;   ///< per-division SWAP threshold
  std::size_t t_d = 2;    ///< look-ahead depth of the division heuristic
  std::size_t swap_budget = kDefaultSwapBudget;
  std::size_t match_budget = kDefaultMatchBudget;
  SabreParams sabre;
};

/// Thrown when a routing step cannot be completed even after the fallback.
class RoutingError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Sum over the two-qubit gates of `c_cur` of dist between their images
/// under `m * s`. Zero iff `m * s` embeds IG(c_cur).
std::uint64_t cost(const SwapSeq& s, std::span<const Gate> c_cur,
                   const Mapping& m, const ArchGraph& ag);

struct SwapSearchResult {
  std::optional<SwapSeq> swaps;
  bool budget_exhausted = false;
  std::size_t extractions = 0;
};

/// Best-first search for a SWAP sequence of length <= t_s after which every
/// gate of `c_cur` is executable.
///
/// The pool is ordered by (cost, length, lexicographic edge indices). Only
/// SWAPs touching a qubit of `c_cur` are generated, states are deduplicated
/// on the positions of those qubits, and a node is discarded when its length
/// plus an admissible lower bound exceeds t_s. After the first zero-cost
/// sequence is found the search keeps draining nodes that could still yield
/// a strictly shorter one, so returned sequences have minimum length unless
/// the budget runs out. Unless `known_embeddable` is set, IG(c_cur) is first
/// checked for embeddability and an unembeddable graph returns at once.
SwapSearchResult search_swaps(std::span<const Gate> c_cur, const Mapping& m,
                              const ArchGraph& ag, std::size_t t_s,
                              std::size_t budget = kDefaultSwapBudget,
                              bool known_embeddable = false);

inline std::optional<SwapSeq> heuristic_swaps(
    std::span<const Gate> c_cur, const Mapping& m, const ArchGraph& ag,
    std::size_t t_s, std::size_t budget = kDefaultSwapBudget) {
  return search_swaps(c_cur, m, ag, t_s, budget).swaps;
}

/// Division-selection score (|C_cur| + |C_next|) / (|S_cur| + |S_next|),
/// kept as an exact ratio. A zero denominator ranks above every finite score;
/// among those, more gates wins. heuristic_dac resolves remaining ties
/// toward the longer current division.
struct DacScore {
  std::size_t gates = 0;
  std::size_t swaps = 0;

  [[nodiscard]] bool infinite() const { return swaps == 0; }
  [[nodiscard]] double value() const;
  friend bool operator>(const DacScore& a, const DacScore& b);
};

/// One division chosen by the heuristic: two-qubit gate positions in the
/// order they were absorbed and the SWAPs to apply before them.
struct DacStep {
  std::vector<std::size_t> gates;
  SwapSeq swaps;
  DacScore score;
};

/// Stateful division-and-routing engine over one logical circuit.
class AdaptiveRouter {
 public:
  AdaptiveRouter(const Circuit& lc, const ArchGraph& ag, AdacParams params);

  /// Chooses the next division from the remaining gates of `cursor` under
  /// mapping `m` (look-ahead depth `t_d`). Returns nullopt when no front
  /// gate can be made executable within `t_s` SWAPs.
  std::optional<DacStep> heuristic_dac(const FrontCursor& cursor,
                                       const Mapping& m, std::size_t t_d,
                                       std::size_t t_s);

  /// Divides and routes the whole circuit starting from `m0`.
  RoutedHalf route(const Mapping& m0);

  [[nodiscard]] const DependencyGraph& dependency_graph() const { return dg_; }
  [[nodiscard]] std::size_t swap_searches() const { return swap_searches_; }

 private:
  std::optional<SwapSeq> swaps_for(const std::vector<Gate>& gates,
                                   const Mapping& m, std::size_t t_s);

  const Circuit& lc_;
  const ArchGraph& ag_;
  AdacParams params_;
  DependencyGraph dg_;
  std::size_t swap_searches_ = 0;
};

/// heuristic_dac on a fresh circuit (nothing executed yet).
std::optional<DacStep> heuristic_dac(const Circuit& lc, const Mapping& m,
                                     const ArchGraph& ag, std::size_t t_d,
                                     std::size_t t_s);

/// Routes `lc` from `m0`. Throws RoutingError if a step is infeasible even
/// with the doubled threshold.
RoutedHalf adaptive_routing(const Circuit& lc, const Mapping& m0,
                            const ArchGraph& ag, const AdacParams& params);

/// Anchor `emb` extended to every logical qubit: unplaced qubits take the
/// free vertex closest to their anchor position, in ascending qubit order.
Mapping extend_mapping(const Mapping& emb, const Mapping& anchor,
                       const ArchGraph& ag);

/// The full pipeline: initial division, distance-biased initial embedding,
/// routing of both halves from it and assembly.
RoutedCircuit adac(const Circuit& lc, const ArchGraph& ag,
                   const AdacParams& params = {});

}  // namespace adac
