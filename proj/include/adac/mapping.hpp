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
#include <limits>
#include <optional>
#include <vector>

#include "adac/arch.hpp"
#include "adac/circuit.hpp"

namespace adac {

inline constexpr Vertex kNoVertex = std::numeric_limits<Vertex>::max();
inline constexpr Qubit kNoQubit = std::numeric_limits<Qubit>::max();

/// Partial injective placement of logical qubits on physical vertices.
class Mapping {
 public:
  Mapping() = default;
  Mapping(std::size_t num_qubits, std::size_t num_vertices)
      : forward_(num_qubits, kNoVertex), inverse_(num_vertices, kNoQubit) {}

  /// logical i -> physical i for every qubit.
  static Mapping trivial(std::size_t num_qubits, std::size_t num_vertices);
  /// Total mapping from a vector indexed by logical qubit. Throws
  /// std::invalid_argument on duplicates or out-of-range vertices.
  static Mapping from_vector(const std::vector<Vertex>& placement,
                             std::size_t num_vertices);

  [[nodiscard]] std::size_t num_qubits() const { return forward_.size(); }
  [[nodiscard]] std::size_t num_vertices() const { return inverse_.size(); }

  [[nodiscard]] bool placed(Qubit q) const {
    return q < forward_.size() && forward_[q] != kNoVertex;
  }
  [[nodiscard]] bool occupied(Vertex v) const { return inverse_[v] != kNoQubit; }
  /// kNoVertex when unplaced.
  [[nodiscard]] Vertex physical(Qubit q) const { return forward_[q]; }
  /// kNoQubit when free.
  [[nodiscard]] Qubit logical(Vertex v) const { return inverse_[v]; }
  /// Throws std::out_of_range when `q` is unplaced.
  [[nodiscard]] Vertex at(Qubit q) const;

  /// Places `q` on free vertex `v`, replacing any earlier placement of `q`.
  void place(Qubit q, Vertex v);
  void unplace(Qubit q);
  /// Exchanges the occupants of `a` and `b` (either may be free). Does not
  /// check adjacency; see `apply_swap`.
  void swap_vertices(Vertex a, Vertex b);

  [[nodiscard]] std::size_t num_placed() const;
  [[nodiscard]] bool is_total() const { return num_placed() == num_qubits(); }
  /// Vector indexed by logical qubit (kNoVertex for unplaced).
  [[nodiscard]] const std::vector<Vertex>& forward() const { return forward_; }
  [[nodiscard]] const std::vector<Qubit>& inverse() const { return inverse_; }

  /// Copy keeping only the listed qubits.
  [[nodiscard]] Mapping restricted_to(const std::vector<Qubit>& qubits) const;

  friend bool operator==(const Mapping&, const Mapping&) = default;

 private:
  std::vector<Vertex> forward_;
  std::vector<Qubit> inverse_;
};

/// Mapping after a SWAP on AG edge `e`. Throws std::invalid_argument when `e`
/// is not an edge of `ag`.
Mapping apply_swap(Mapping m, const ArchGraph& ag, Edge e);
/// In-place variant.
void apply_swap_inplace(Mapping& m, const ArchGraph& ag, Edge e);

/// dist between the images of a two-qubit gate's qubits; 0 iff the gate is
/// executable under `m`. Throws std::invalid_argument if either qubit is
/// unplaced or the gate is single-qubit.
std::uint32_t swap_distance_lower_bound(const ArchGraph& ag, const Gate& g,
                                        const Mapping& m);

}  // namespace adac
