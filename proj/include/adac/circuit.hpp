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
#include <utility>
#include <vector>

namespace adac {

using Qubit = std::uint32_t;
using GateId = std::size_t;

enum class GateKind : std::uint8_t { Single, Cnot, Swap };

/// A gate in a logical or physical circuit.
///
/// Single-qubit gates are opaque: only the label and the qubit matter for
/// mapping. For `Cnot`, `q0` is the control and `q1` the target. `id` is the
/// gate's ordinal in the circuit that created it; `reverse` keeps ids so a
/// reversed circuit can be traced back to its source.
struct Gate {
  GateKind kind = GateKind::Single;
  Qubit q0 = 0;
  Qubit q1 = 0;
  std::string label;
  GateId id = 0;

  static Gate single(std::string label, Qubit q) {
    return Gate{GateKind::Single, q, q, std::move(label), 0};
  }
  static Gate cnot(Qubit control, Qubit target) {
    return Gate{GateKind::Cnot, control, target, {}, 0};
  }
  static Gate swap(Qubit a, Qubit b) {
    return Gate{GateKind::Swap, a, b, {}, 0};
  }

  [[nodiscard]] bool is_two_qubit() const { return kind != GateKind::Single; }
  [[nodiscard]] bool acts_on(Qubit q) const {
    return q0 == q || (is_two_qubit() && q1 == q);
  }

  /// Equality ignores `id`.
  [[nodiscard]] bool same_operation(const Gate& other) const {
    return kind == other.kind && q0 == other.q0 && q1 == other.q1 &&
           label == other.label;
  }
};

std::string to_string(const Gate& g);

/// An ordered gate sequence over `num_qubits` qubits.
class Circuit {
 public:
  Circuit() = default;
  explicit Circuit(std::size_t num_qubits) : num_qubits_(num_qubits) {}

  /// Appends `g`, assigning the next dense id. Throws std::invalid_argument
  /// on out-of-range qubits or a two-qubit gate on a single qubit.
  GateId add(Gate g);
  GateId add_single(std::string label, Qubit q) {
    return add(Gate::single(std::move(label), q));
  }
  GateId add_cnot(Qubit control, Qubit target) {
    return add(Gate::cnot(control, target));
  }
  GateId add_swap(Qubit a, Qubit b) { return add(Gate::swap(a, b)); }

  /// Appends `g` keeping its id as-is. Used when assembling views of
  /// another circuit.
  void push_raw(Gate g);

  [[nodiscard]] std::size_t num_qubits() const { return num_qubits_; }
  [[nodiscard]] std::size_t size() const { return gates_.size(); }
  [[nodiscard]] bool empty() const { return gates_.empty(); }
  [[nodiscard]] const std::vector<Gate>& gates() const { return gates_; }
  [[nodiscard]] const Gate& operator[](std::size_t pos) const {
    return gates_[pos];
  }
  [[nodiscard]] std::size_t count_two_qubit() const;
  [[nodiscard]] std::size_t count(GateKind kind) const;

  auto begin() const { return gates_.begin(); }
  auto end() const { return gates_.end(); }

  friend bool operator==(const Circuit& a, const Circuit& b);

 private:
  void check_qubits(const Gate& g) const;

  std::size_t num_qubits_ = 0;
  std::vector<Gate> gates_;
};

/// Gate order reversed; ids are preserved.
Circuit reverse(const Circuit& c);

/// Replaces every `Swap` gate by its three-CNOT decomposition and renumbers
/// ids densely. Routers only accept swap-free logical circuits.
Circuit lower_swaps(const Circuit& c);

/// Dependency DAG over the two-qubit gates of a gate sequence.
///
/// Nodes are positions in the sequence (for a freshly built circuit the
/// position equals the gate id). Single-qubit gates are not nodes; each one
/// is attached to the nearest earlier two-qubit gate on its qubit, or
/// reported as leading when no such gate exists.
class DependencyGraph {
 public:
  DependencyGraph() = default;
  explicit DependencyGraph(std::span<const Gate> gates);
  explicit DependencyGraph(const Circuit& c)
      : DependencyGraph(std::span<const Gate>(c.gates())) {}

  [[nodiscard]] std::size_t num_positions() const { return is_node_.size(); }
  [[nodiscard]] std::size_t num_nodes() const { return nodes_.size(); }
  /// Two-qubit gate positions in ascending order.
  [[nodiscard]] const std::vector<std::size_t>& nodes() const { return nodes_; }
  [[nodiscard]] bool is_node(std::size_t pos) const { return is_node_[pos]; }
  [[nodiscard]] const std::vector<std::size_t>& predecessors(
      std::size_t pos) const {
    return preds_[pos];
  }
  [[nodiscard]] const std::vector<std::size_t>& successors(
      std::size_t pos) const {
    return succs_[pos];
  }
  /// Single-qubit gate positions that follow two-qubit gate `pos` on one of
  /// its qubits, up to the next two-qubit gate on that qubit.
  [[nodiscard]] const std::vector<std::size_t>& trailing_singles(
      std::size_t pos) const {
    return trailing_[pos];
  }
  /// Single-qubit gates with no earlier two-qubit gate on their qubit.
  [[nodiscard]] const std::vector<std::size_t>& leading_singles() const {
    return leading_;
  }

  /// Unexecuted nodes whose predecessors are all in `executed`, ascending.
  /// Throws std::invalid_argument when `executed` is not downward-closed or
  /// names a non-node position.
  [[nodiscard]] std::vector<std::size_t> front_layer(
      std::span<const std::size_t> executed) const;

 private:
  std::vector<bool> is_node_;
  std::vector<std::size_t> nodes_;
  std::vector<std::vector<std::size_t>> preds_;
  std::vector<std::vector<std::size_t>> succs_;
  std::vector<std::vector<std::size_t>> trailing_;
  std::vector<std::size_t> leading_;
};

/// Incremental front-layer tracker owned by one routing run.
class FrontCursor {
 public:
  explicit FrontCursor(const DependencyGraph& dg);

  /// Restricts the cursor to positions >= `first`: earlier nodes count as
  /// already executed.
  FrontCursor(const DependencyGraph& dg, std::size_t first);

  [[nodiscard]] const std::vector<std::size_t>& front() const {
    return front_;
  }
  [[nodiscard]] bool done(std::size_t pos) const { return done_[pos]; }
  [[nodiscard]] std::size_t remaining() const { return remaining_; }
  [[nodiscard]] bool exhausted() const { return remaining_ == 0; }

  /// Marks front node `pos` executed and exposes its ready successors.
  void execute(std::size_t pos);
  /// Reverts the most recent `execute(pos)`.
  void undo(std::size_t pos);

 private:
  const DependencyGraph* dg_;
  std::vector<std::uint32_t> pending_;
  std::vector<bool> done_;
  std::vector<std::size_t> front_;
  std::size_t remaining_ = 0;
};

/// Undirected interaction graph of a gate sequence's two-qubit gates.
class InteractionGraph {
 public:
  InteractionGraph() = default;
  explicit InteractionGraph(std::size_t num_qubits)
      : adjacency_(num_qubits) {}

  /// Adds edge {a,b}; returns false when it was already present.
  bool add_edge(Qubit a, Qubit b);
  [[nodiscard]] bool has_edge(Qubit a, Qubit b) const;

  [[nodiscard]] std::size_t num_qubits() const { return adjacency_.size(); }
  /// Qubits with at least one incident edge, ascending.
  [[nodiscard]] std::vector<Qubit> nodes() const;
  [[nodiscard]] std::size_t num_nodes() const;
  /// Edges as (min, max) pairs in insertion order.
  [[nodiscard]] const std::vector<std::pair<Qubit, Qubit>>& edges() const {
    return edges_;
  }
  [[nodiscard]] const std::vector<Qubit>& neighbors(Qubit q) const {
    return adjacency_[q];
  }
  [[nodiscard]] std::size_t degree(Qubit q) const {
    return adjacency_[q].size();
  }

  /// Same node and edge sets.
  friend bool operator==(const InteractionGraph& a, const InteractionGraph& b);

 private:
  std::vector<std::vector<Qubit>> adjacency_;
  std::vector<std::pair<Qubit, Qubit>> edges_;
};

InteractionGraph interaction_graph(std::span<const Gate> gates,
                                   std::size_t num_qubits);
inline InteractionGraph interaction_graph(const Circuit& c) {
  return interaction_graph(c.gates(), c.num_qubits());
}

}  // namespace adac
