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

#include "adac/arch.hpp"

#include <algorithm>
#include <cctype>
#include <deque>
#include <limits>
#include <regex>
#include <stdexcept>

namespace adac {

namespace {

constexpr std::uint32_t kUnreached = std::numeric_limits<std::uint32_t>::max();

// IBM Q Tokyo: a 4x5 grid plus crossing diagonals in six of its squares.
constexpr Edge kTokyoEdges[] = {
    {0, 1},   {1, 2},   {2, 3},   {3, 4},   {5, 6},   {6, 7},   {7, 8},
    {8, 9},   {10, 11}, {11, 12}, {12, 13}, {13, 14}, {15, 16}, {16, 17},
    {17, 18}, {18, 19}, {0, 5},   {1, 6},   {2, 7},   {3, 8},   {4, 9},
    {5, 10},  {6, 11},  {7, 12},  {8, 13},  {9, 14},  {10, 15}, {11, 16},
    {12, 17}, {13, 18}, {14, 19}, {1, 7},   {2, 6},   {3, 9},   {4, 8},
    {5, 11},  {6, 10},  {7, 13},  {8, 12},  {11, 17}, {12, 16}, {13, 19},
    {14, 18},
};

// Sycamore occupancy by row on the rotated square lattice; a qubit couples
// to its up/down/left/right grid neighbours.
constexpr const char* kSycamoreRows[] = {
    "-----AB---", "----ABCD--", "---ABCDEF-", "--ABCDEFGH", "-ABCDEFGHI",
    "ABCDEFGHI-", "-CDEFGHI--", "--EFGHI---", "---GHI----", "----I-----",
};

}  // namespace

ArchGraph::ArchGraph(std::size_t num_vertices, std::vector<Edge> edges,
                     std::string name)
    : name_(std::move(name)), n_(num_vertices), adjacency_(num_vertices) {
  if (n_ < 2) {
    throw std::invalid_argument("architecture needs at least 2 vertices");
  }
  for (auto& [a, b] : edges) {
    if (a >= n_ || b >= n_) {
      throw std::invalid_argument("edge (" + std::to_string(a) + "," +
                                  std::to_string(b) + ") is out of range");
    }
    if (a == b) {
      throw std::invalid_argument("self-loop on vertex " + std::to_string(a));
    }
    if (a > b) std::swap(a, b);
  }
  std::sort(edges.begin(), edges.end());
  if (auto dup = std::adjacent_find(edges.begin(), edges.end());
      dup != edges.end()) {
    throw std::invalid_argument("duplicate edge (" +
                                std::to_string(dup->first) + "," +
                                std::to_string(dup->second) + ")");
  }
  edges_ = std::move(edges);
  for (auto [a, b] : edges_) {
    adjacency_[a].push_back(b);
    adjacency_[b].push_back(a);
  }
  for (auto& adj : adjacency_) {
    std::sort(adj.begin(), adj.end());
    max_degree_ = std::max(max_degree_, adj.size());
  }

  // BFS from every vertex.
  hop_.assign(n_ * n_, kUnreached);
  std::deque<Vertex> queue;
  for (Vertex src = 0; src < n_; ++src) {
    std::uint32_t* row = &hop_[src * n_];
    row[src] = 0;
    queue.assign(1, src);
    while (!queue.empty()) {
      const Vertex v = queue.front();
      queue.pop_front();
      for (Vertex w : adjacency_[v]) {
        if (row[w] == kUnreached) {
          row[w] = row[v] + 1;
          queue.push_back(w);
        }
      }
    }
    for (Vertex v = 0; v < n_; ++v) {
      if (row[v] == kUnreached) {
        throw std::invalid_argument("architecture graph is disconnected (" +
                                    std::to_string(src) + " cannot reach " +
                                    std::to_string(v) + ")");
      }
      diameter_ = std::max(diameter_, row[v]);
    }
  }
  // Row 0 holds BFS levels from vertex 0; an edge inside a level is an odd
  // cycle.
  for (auto [a, b] : edges_) {
    if (hop_[a] % 2 == hop_[b] % 2) bipartite_ = false;
  }
}

ArchGraph ArchGraph::line(std::size_t n) {
  std::vector<Edge> edges;
  for (std::size_t i = 0; i + 1 < n; ++i) {
    edges.emplace_back(static_cast<Vertex>(i), static_cast<Vertex>(i + 1));
  }
  return ArchGraph(n, std::move(edges), "line" + std::to_string(n));
}

ArchGraph ArchGraph::grid(std::size_t rows, std::size_t cols) {
  std::vector<Edge> edges;
  auto id = [cols](std::size_t r, std::size_t c) {
    return static_cast<Vertex>(r * cols + c);
  };
  for (std::size_t r = 0; r < rows; ++r) {
    for (std::size_t c = 0; c < cols; ++c) {
      if (c + 1 < cols) edges.emplace_back(id(r, c), id(r, c + 1));
      if (r + 1 < rows) edges.emplace_back(id(r, c), id(r + 1, c));
    }
  }
  return ArchGraph(rows * cols, std::move(edges),
                   "grid" + std::to_string(rows) + "x" + std::to_string(cols));
}

ArchGraph ArchGraph::tokyo() {
  return ArchGraph(20, {std::begin(kTokyoEdges), std::end(kTokyoEdges)},
                   "tokyo");
}

ArchGraph ArchGraph::sycamore() {
  constexpr int kRows = static_cast<int>(std::size(kSycamoreRows));
  constexpr int kCols = 10;
  std::vector<std::vector<int>> index(kRows, std::vector<int>(kCols, -1));
  int next = 0;
  for (int r = 0; r < kRows; ++r) {
    for (int c = 0; c < kCols; ++c) {
      if (kSycamoreRows[r][c] != '-') index[r][c] = next++;
    }
  }
  std::vector<Edge> edges;
  for (int r = 0; r < kRows; ++r) {
    for (int c = 0; c < kCols; ++c) {
      if (index[r][c] < 0) continue;
      if (c + 1 < kCols && index[r][c + 1] >= 0) {
        edges.emplace_back(index[r][c], index[r][c + 1]);
      }
      if (r + 1 < kRows && index[r + 1][c] >= 0) {
        edges.emplace_back(index[r][c], index[r + 1][c]);
      }
    }
  }
  return ArchGraph(static_cast<std::size_t>(next), std::move(edges),
                   "sycamore");
}

ArchGraph ArchGraph::by_name(const std::string& raw) {
  std::string name;
  for (char ch : raw) {
    name.push_back(static_cast<char>(std::tolower(static_cast<unsigned char>(ch))));
  }
  if (name == "tokyo" || name == "ibm_tokyo") return tokyo();
  if (name == "sycamore" || name == "google_sycamore") return sycamore();
  std::smatch m;
  if (std::regex_match(name, m, std::regex(R"(line:?(\d+))"))) {
    return line(std::stoul(m[1]));
  }
  if (std::regex_match(name, m, std::regex(R"(grid:?(\d+)x(\d+))"))) {
    return grid(std::stoul(m[1]), std::stoul(m[2]));
  }
  throw std::invalid_argument("unknown architecture '" + raw + "'");
}

int ArchGraph::edge_index(Vertex a, Vertex b) const {
  const Edge key{std::min(a, b), std::max(a, b)};
  auto it = std::lower_bound(edges_.begin(), edges_.end(), key);
  if (it == edges_.end() || *it != key) return -1;
  return static_cast<int>(it - edges_.begin());
}

Vertex ArchGraph::step_towards(Vertex from, Vertex to) const {
  for (Vertex w : adjacency_[from]) {
    if (hops(w, to) + 1 == hops(from, to)) return w;
  }
  throw std::logic_error("step_towards called with from == to");
}

}  // namespace adac
