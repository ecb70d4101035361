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

#include <algorithm>
#include <memory>
#include <queue>
#include <stdexcept>
#include <string>
#include <unordered_map>

#include "adac/route.hpp"

namespace adac {

std::uint64_t cost(const SwapSeq& s, std::span<const Gate> c_cur,
                   const Mapping& m, const ArchGraph& ag) {
  Mapping tau = m;
  for (const Edge& e : s) apply_swap_inplace(tau, ag, e);
  std::uint64_t total = 0;
  for (const Gate& g : c_cur) {
    if (!g.is_two_qubit()) continue;
    total += swap_distance_lower_bound(ag, g, tau);
  }
  return total;
}

namespace {

struct Pair {
  std::uint8_t a;
  std::uint8_t b;
  std::uint32_t weight;
};

struct Node {
  std::uint64_t cost;
  std::uint32_t lb;
  std::vector<std::uint8_t> pos;  // vertex of each relevant qubit
  std::vector<std::uint16_t> seq;  // edge indices
};

// Min-heap order: cost, then length, then lexicographic edge indices.
struct Later {
  bool operator()(const Node* x, const Node* y) const {
    if (x->cost != y->cost) return x->cost > y->cost;
    if (x->seq.size() != y->seq.size()) return x->seq.size() > y->seq.size();
    return x->seq > y->seq;
  }
};

class Search {
 public:
  Search(std::span<const Gate> c_cur, const Mapping& m, const ArchGraph& ag)
      : ag_(ag) {
    std::vector<Qubit> qubits;
    for (const Gate& g : c_cur) {
      if (!g.is_two_qubit()) continue;
      qubits.push_back(g.q0);
      qubits.push_back(g.q1);
    }
    std::sort(qubits.begin(), qubits.end());
    qubits.erase(std::unique(qubits.begin(), qubits.end()), qubits.end());
    if (ag.num_vertices() > 255) {
      throw std::invalid_argument("SWAP search supports at most 255 vertices");
    }
    auto slot = [&](Qubit q) {
      return static_cast<std::uint8_t>(
          std::lower_bound(qubits.begin(), qubits.end(), q) - qubits.begin());
    };
    for (Qubit q : qubits) {
      if (!m.placed(q)) {
        throw std::invalid_argument("qubit " + std::to_string(q) +
                                    " is not placed");
      }
      root_pos_.push_back(static_cast<std::uint8_t>(m.physical(q)));
    }
    for (const Gate& g : c_cur) {
      if (!g.is_two_qubit()) continue;
      std::uint8_t a = slot(g.q0);
      std::uint8_t b = slot(g.q1);
      if (a > b) std::swap(a, b);
      auto it = std::find_if(pairs_.begin(), pairs_.end(), [&](const Pair& p) {
        return p.a == a && p.b == b;
      });
      if (it == pairs_.end()) {
        pairs_.push_back({a, b, 1});
      } else {
        ++it->weight;
      }
    }
    std::vector<std::uint32_t> degree(qubits.size(), 0);
    for (const Pair& p : pairs_) {
      ++degree[p.a];
      ++degree[p.b];
    }
    std::sort(degree.rbegin(), degree.rend());
    if (degree.size() >= 2) max_reduction_ = degree[0] + degree[1];
    occupant_.assign(ag.num_vertices(), -1);
  }

  SwapSearchResult run(std::size_t t_s, std::size_t budget) {
    SwapSearchResult result;
    auto root = std::make_unique<Node>();
    root->pos = root_pos_;
    score(*root);
    if (root->lb > t_s) return result;

    std::priority_queue<Node*, std::vector<Node*>, Later> pool;
    std::vector<std::unique_ptr<Node>> arena;
    std::unordered_map<std::string, std::uint32_t> visited;
    visited.emplace(key(root->pos), 0);
    pool.push(root.get());
    arena.push_back(std::move(root));

    std::optional<std::vector<std::uint16_t>> best;
    std::size_t best_len = 0;
    std::vector<std::uint16_t> moves;

    while (!pool.empty()) {
      Node* node = pool.top();
      pool.pop();
      const std::size_t len = node->seq.size();
      if (best && len + node->lb >= best_len) continue;
      if (result.extractions == budget) {
        result.budget_exhausted = true;
        break;
      }
      ++result.extractions;
      if (node->cost == 0) {
        best = node->seq;
        best_len = len;
        continue;
      }
      if (len >= t_s) continue;

      for (std::size_t i = 0; i < node->pos.size(); ++i) {
        occupant_[node->pos[i]] = static_cast<int>(i);
      }
      moves.clear();
      for (std::uint8_t v : node->pos) {
        for (Vertex w : ag_.neighbors(v)) {
          moves.push_back(static_cast<std::uint16_t>(ag_.edge_index(v, w)));
        }
      }
      std::sort(moves.begin(), moves.end());
      moves.erase(std::unique(moves.begin(), moves.end()), moves.end());

      for (std::uint16_t e : moves) {
        const auto [u, v] = ag_.edges()[e];
        auto child = std::make_unique<Node>();
        child->pos = node->pos;
        if (occupant_[u] >= 0) child->pos[occupant_[u]] = static_cast<std::uint8_t>(v);
        if (occupant_[v] >= 0) child->pos[occupant_[v]] = static_cast<std::uint8_t>(u);
        score(*child);
        const std::size_t clen = len + 1;
        if (clen + child->lb > t_s) continue;
        if (best && clen + child->lb >= best_len) continue;
        auto [it, fresh] = visited.emplace(key(child->pos), clen);
        if (!fresh) {
          if (it->second <= clen) continue;
          it->second = static_cast<std::uint32_t>(clen);
        }
        child->seq = node->seq;
        child->seq.push_back(e);
        pool.push(child.get());
        arena.push_back(std::move(child));
      }
      for (std::uint8_t v : node->pos) occupant_[v] = -1;
    }

    if (best) {
      SwapSeq out;
      for (std::uint16_t e : *best) out.push_back(ag_.edges()[e]);
      result.swaps = std::move(out);
    }
    return result;
  }

 private:
  void score(Node& n) const {
    std::uint64_t weighted = 0;
    std::uint64_t plain = 0;
    std::uint32_t longest = 0;
    for (const Pair& p : pairs_) {
      const std::uint32_t d = ag_.dist(n.pos[p.a], n.pos[p.b]);
      weighted += static_cast<std::uint64_t>(d) * p.weight;
      plain += d;
      longest = std::max(longest, d);
    }
    n.cost = weighted;
    // One SWAP moves at most two of these qubits by one hop each, changing
    // each incident pair's dist by at most one.
    std::uint32_t lb = longest;
    if (max_reduction_ > 0) {
      lb = std::max<std::uint32_t>(
          lb, static_cast<std::uint32_t>((plain + max_reduction_ - 1) /
                                         max_reduction_));
    }
    n.lb = lb;
  }

  static std::string key(const std::vector<std::uint8_t>& pos) {
    return {pos.begin(), pos.end()};
  }

  const ArchGraph& ag_;
  std::vector<std::uint8_t> root_pos_;
  std::vector<Pair> pairs_;
  std::uint32_t max_reduction_ = 0;
  std::vector<int> occupant_;
};

}  // namespace

SwapSearchResult search_swaps(std::span<const Gate> c_cur, const Mapping& m,
                              const ArchGraph& ag, std::size_t t_s,
                              std::size_t budget, bool known_embeddable) {
  if (!known_embeddable) {
    const InteractionGraph ig = interaction_graph(c_cur, m.num_qubits());
    if (!is_embeddable(ig, ag)) return {};
  }
  Search search(c_cur, m, ag);
  return search.run(t_s, budget);
}

}  // namespace adac
