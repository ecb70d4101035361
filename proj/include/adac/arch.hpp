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
#include <string>
#include <utility>
#include <vector>

namespace adac {

using Vertex = std::uint32_t;
using Edge = std::pair<Vertex, Vertex>;

/// Undirected coupling graph of a device with all-pairs distances.
///
/// `hops(a, b)` is the shortest-path length; `dist(a, b)` is the number of
/// SWAPs needed before a CNOT between `a` and `b` becomes executable, i.e.
/// `hops - 1` for distinct vertices and 0 on the diagonal. A CNOT is
/// executable exactly when its endpoints have `dist == 0`.
class ArchGraph {
 public:
  /// Validates and builds. Throws std::invalid_argument on fewer than two
  /// vertices, out-of-range endpoints, self-loops, duplicate edges, or a
  /// disconnected graph.
  ArchGraph(std::size_t num_vertices, std::vector<Edge> edges,
            std::string name = "custom");

  static ArchGraph line(std::size_t n);
  static ArchGraph grid(std::size_t rows, std::size_t cols);
  /// IBM Q Tokyo, 20 qubits.
  static ArchGraph tokyo();
  /// Google Sycamore, 54 qubits.
  static ArchGraph sycamore();
  /// Resolves "tokyo", "sycamore", "line<N>" / "line:N", "grid<R>x<C>" /
  /// "grid:RxC" (case-insensitive). Throws std::invalid_argument otherwise.
  static ArchGraph by_name(const std::string& name);

  [[nodiscard]] const std::string& name() const { return name_; }
  [[nodiscard]] std::size_t num_vertices() const { return n_; }
  /// Edges normalised to (min, max), sorted ascending.
  [[nodiscard]] const std::vector<Edge>& edges() const { return edges_; }
  [[nodiscard]] std::size_t num_edges() const { return edges_.size(); }
  [[nodiscard]] const std::vector<Vertex>& neighbors(Vertex v) const {
    return adjacency_[v];
  }
  [[nodiscard]] std::size_t degree(Vertex v) const {
    return adjacency_[v].size();
  }
  [[nodiscard]] std::size_t max_degree() const { return max_degree_; }

  [[nodiscard]] bool is_edge(Vertex a, Vertex b) const {
    return a != b && hop_[a * n_ + b] == 1;
  }
  /// Index of edge {a,b} in `edges()`, or -1.
  [[nodiscard]] int edge_index(Vertex a, Vertex b) const;
  [[nodiscard]] std::uint32_t hops(Vertex a, Vertex b) const {
    return hop_[a * n_ + b];
  }
  [[nodiscard]] std::uint32_t dist(Vertex a, Vertex b) const {
    return a == b ? 0 : hop_[a * n_ + b] - 1;
  }
  [[nodiscard]] std::uint32_t diameter() const { return diameter_; }
  [[nodiscard]] bool is_bipartite() const { return bipartite_; }

  /// Next vertex after `from` on a shortest path to `to` (smallest id among
  /// ties). Requires from != to.
  [[nodiscard]] Vertex step_towards(Vertex from, Vertex to) const;

 private:
  std::string name_;
  std::size_t n_;
  std::vector<Edge> edges_;
  std::vector<std::vector<Vertex>> adjacency_;
  std::vector<std::uint32_t> hop_;
  std::size_t max_degree_ = 0;
  std::uint32_t diameter_ = 0;
  bool bipartite_ = true;
};

/// Version tag of the built-in device edge lists.
inline constexpr int kTopologyDataVersion = 1;

}  // namespace adac
