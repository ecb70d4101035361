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

#include "adac/divide.hpp"

#include <algorithm>
#include <numeric>

namespace adac {

namespace {

/// Grows an embeddable gate set from one start gate.
class Grower {
 public:
  Grower(const Circuit& c, const DependencyGraph& dg, const ArchGraph& ag,
         std::size_t budget)
      : c_(c), dg_(dg), ag_(ag), budget_(budget) {}

  std::vector<std::size_t> grow(std::size_t start) {
    FrontCursor cursor(dg_, start);
    IncrementalEmbedder emb(ag_, c_.num_qubits(), budget_);
    std::vector<std::size_t> members;
    std::vector<bool> blocked(dg_.num_positions(), false);

    // A single edge always embeds on a connected device.
    emb.try_add(c_[start].q0, c_[start].q1);
    cursor.execute(start);
    members.push_back(start);

    for (;;) {
      const std::vector<std::size_t> snapshot = cursor.front();
      bool absorbed_any = false;
      for (std::size_t pos : snapshot) {
        if (blocked[pos] || cursor.done(pos)) continue;
        // Interaction graphs only grow, so a rejected gate stays rejected.
        if (!emb.try_add(c_[pos].q0, c_[pos].q1)) {
          blocked[pos] = true;
          continue;
        }
        cursor.execute(pos);
        members.push_back(pos);
        absorbed_any = true;
      }
      if (!absorbed_any) break;
    }
    std::sort(members.begin(), members.end());
    return members;
  }

 private:
  const Circuit& c_;
  const DependencyGraph& dg_;
  const ArchGraph& ag_;
  std::size_t budget_;
};

enum class Part : std::uint8_t { Pre, Mid, Post };

}  // namespace

std::size_t Division::mid_two_qubit(const Circuit& c) const {
  return static_cast<std::size_t>(
      std::count_if(mid.begin(), mid.end(),
                    [&](std::size_t p) { return c[p].is_two_qubit(); }));
}

Division max_subgraph_division(const Circuit& c, const ArchGraph& ag,
                               std::size_t budget) {
  const DependencyGraph dg(c);
  Division out;
  if (dg.num_nodes() == 0) {
    out.mid.resize(c.size());
    std::iota(out.mid.begin(), out.mid.end(), std::size_t{0});
    return out;
  }

  Grower grower(c, dg, ag, budget);
  std::vector<std::size_t> best;
  std::size_t best_start = 0;
  const auto& nodes = dg.nodes();
  for (std::size_t i = 0; i < nodes.size(); ++i) {
    if (nodes.size() - i <= best.size()) break;
    std::vector<std::size_t> grown = grower.grow(nodes[i]);
    if (grown.size() > best.size()) {
      best = std::move(grown);
      best_start = nodes[i];
    }
  }

  std::vector<Part> part(c.size(), Part::Post);
  for (std::size_t pos : dg.nodes()) {
    if (pos < best_start) part[pos] = Part::Pre;
  }
  for (std::size_t pos : best) part[pos] = Part::Mid;

  // Single-qubit gates ride with a neighbouring two-qubit gate on their
  // qubit: the previous one, else the next one, else the middle.
  for (std::size_t pos : dg.nodes()) {
    for (std::size_t s : dg.trailing_singles(pos)) part[s] = part[pos];
  }
  for (std::size_t s : dg.leading_singles()) {
    part[s] = Part::Mid;
    for (std::size_t p = s + 1; p < c.size(); ++p) {
      if (c[p].is_two_qubit() && c[p].acts_on(c[s].q0)) {
        part[s] = part[p];
        break;
      }
    }
  }

  for (std::size_t pos = 0; pos < c.size(); ++pos) {
    switch (part[pos]) {
      case Part::Pre: out.pre.push_back(pos); break;
      case Part::Mid: out.mid.push_back(pos); break;
      case Part::Post: out.post.push_back(pos); break;
    }
  }
  out.start = best_start;
  return out;
}

std::optional<std::string> check_division(const Circuit& c,
                                          const ArchGraph& ag,
                                          const Division& d) {
  std::vector<int> seen(c.size(), 0);
  std::vector<std::size_t> order;
  for (const auto* part : {&d.pre, &d.mid, &d.post}) {
    if (!std::is_sorted(part->begin(), part->end())) {
      return "division part is not in ascending order";
    }
    for (std::size_t pos : *part) {
      if (pos >= c.size()) return "division names an out-of-range gate";
      ++seen[pos];
      order.push_back(pos);
    }
  }
  for (std::size_t pos = 0; pos < c.size(); ++pos) {
    if (seen[pos] != 1) {
      return "gate " + std::to_string(pos) + " appears " +
             std::to_string(seen[pos]) + " times in the division";
    }
  }

  std::vector<Gate> mid_gates;
  for (std::size_t pos : d.mid) mid_gates.push_back(c[pos]);
  if (!is_embeddable(interaction_graph(mid_gates, c.num_qubits()), ag)) {
    return "interaction graph of the middle part is not embeddable";
  }

  std::vector<std::size_t> last(c.num_qubits(), 0);
  std::vector<bool> any(c.num_qubits(), false);
  for (std::size_t pos : order) {
    const Gate& g = c[pos];
    for (Qubit q : {g.q0, g.q1}) {
      if (any[q] && last[q] > pos) {
        return "gate " + std::to_string(pos) + " is placed after gate " +
               std::to_string(last[q]) + " on qubit " + std::to_string(q);
      }
      any[q] = true;
      last[q] = pos;
    }
  }
  return std::nullopt;
}

Circuit subcircuit(const Circuit& c, const std::vector<std::size_t>& positions) {
  Circuit out(c.num_qubits());
  for (std::size_t pos : positions) {
    Gate g = c[pos];
    out.add(std::move(g));
  }
  return out;
}

}  // namespace adac
