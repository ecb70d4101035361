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
#include <functional>
#include <optional>
#include <vector>

#include "adac/arch.hpp"
#include "adac/circuit.hpp"
#include "adac/mapping.hpp"

namespace adac {

/// Default cap on recursive assignment steps per matcher call.
inline constexpr std::size_t kDefaultMatchBudget = 1'000'000;

/// True when `m` places every IG node and sends every IG edge to an AG edge.
bool is_embedding(const InteractionGraph& ig, const ArchGraph& ag,
                  const Mapping& m);

/// Depth-first subgraph matcher (VF2-style) from an interaction graph into
/// an architecture graph.
///
/// IG nodes are matched in a fixed connectivity order: the highest-degree
/// node first, then repeatedly the node with the most already-ordered
/// neighbours (ties: higher degree, then lower id). A node with an ordered
/// neighbour only tries the AG neighbours of that neighbour's image; others
/// try every vertex in ascending order. Candidates are pruned on degree, on
/// adjacency with every matched neighbour, and on free-neighbour counts.
class SubgraphMatcher {
 public:
  SubgraphMatcher(const InteractionGraph& ig, const ArchGraph& ag,
                  std::size_t budget = kDefaultMatchBudget);

  /// Calls `visit` on each embedding in deterministic order until it
  /// returns false. Returns false if the step budget ran out first.
  bool for_each(const std::function<bool(const Mapping&)>& visit);

  /// Embedding minimising the summed hop distance to `anchor` over IG nodes; ties go
  /// to the lexicographically smallest placement vector. On budget
  /// exhaustion the best embedding seen so far is returned.
  std::optional<Mapping> best(const Mapping& anchor);

  /// Cheap necessary conditions (sizes, degree sequence, bipartiteness).
  [[nodiscard]] bool plausible() const { return plausible_; }
  [[nodiscard]] std::size_t steps() const { return steps_; }
  [[nodiscard]] bool budget_exhausted() const { return exhausted_; }

 private:
  bool feasible(Qubit x, Vertex v) const;
  bool search(std::size_t depth,
              const std::function<bool(const Mapping&)>& visit);
  void search_best(std::size_t depth, std::uint64_t partial);
  std::vector<Vertex> candidates(std::size_t depth) const;

  const InteractionGraph& ig_;
  const ArchGraph& ag_;
  std::size_t budget_;
  std::size_t steps_ = 0;
  bool exhausted_ = false;
  bool plausible_ = true;

  std::vector<Qubit> order_;
  // For each position in order_, an earlier-ordered neighbour or kNoQubit.
  std::vector<Qubit> parent_;
  std::vector<std::size_t> ig_degree_;
  Mapping current_;

  // best() state
  const Mapping* anchor_ = nullptr;
  std::optional<Mapping> best_;
  std::uint64_t best_cost_ = 0;
};

/// Whether at least one embedding exists. Budget exhaustion returns false and
/// logs a warning.
bool is_embeddable(const InteractionGraph& ig, const ArchGraph& ag,
                   std::size_t budget = kDefaultMatchBudget);

/// Up to `limit` distinct embeddings in deterministic order. Throws
/// std::invalid_argument when limit is 0.
std::vector<Mapping> enumerate_embeddings(
    const InteractionGraph& ig, const ArchGraph& ag, std::size_t limit,
    std::size_t budget = kDefaultMatchBudget);

/// Distance-biased embedding selection: argmin over embeddings of
/// sum_q hops(tau(q), anchor(q)). Throws std::invalid_argument when `anchor`
/// leaves an IG node unplaced.
std::optional<Mapping> best_embedding(const InteractionGraph& ig,
                                      const ArchGraph& ag,
                                      const Mapping& anchor,
                                      std::size_t budget = kDefaultMatchBudget);

/// Interaction graph grown edge by edge while it stays embeddable, with a
/// witness embedding kept alongside so most additions avoid a full matcher
/// run.
class IncrementalEmbedder {
 public:
  IncrementalEmbedder(const ArchGraph& ag, std::size_t num_qubits,
                      std::size_t budget = kDefaultMatchBudget);

  /// Adds edge {a,b} when the grown graph is still embeddable; otherwise
  /// leaves the state untouched and returns false.
  bool try_add(Qubit a, Qubit b);

  [[nodiscard]] const InteractionGraph& graph() const { return ig_; }
  [[nodiscard]] const Mapping& witness() const { return witness_; }

 private:
  const ArchGraph* ag_;
  std::size_t budget_;
  InteractionGraph ig_;
  Mapping witness_;
};

/// Sum of hop distances between `m` and `anchor` over the IG nodes.
std::uint64_t embedding_distance(const InteractionGraph& ig,
                                 const ArchGraph& ag, const Mapping& m,
                                 const Mapping& anchor);

}  // namespace adac
