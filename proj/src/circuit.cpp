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

#include "adac/circuit.hpp"

#include <algorithm>
#include <sstream>

namespace adac {

std::string to_string(const Gate& g) {
  std::ostringstream os;
  switch (g.kind) {
    case GateKind::Single:
      os << g.label << " q" << g.q0;
      break;
    case GateKind::Cnot:
      os << "cx q" << g.q0 << ",q" << g.q1;
      break;
    case GateKind::Swap:
      os << "swap q" << g.q0 << ",q" << g.q1;
      break;
  }
  return os.str();
}

void Circuit::check_qubits(const Gate& g) const {
  if (g.q0 >= num_qubits_ || (g.is_two_qubit() && g.q1 >= num_qubits_)) {
    throw std::invalid_argument("gate '" + to_string(g) +
                                "' references a qubit outside a register of " +
                                std::to_string(num_qubits_));
  }
  if (g.is_two_qubit() && g.q0 == g.q1) {
    throw std::invalid_argument("two-qubit gate '" + to_string(g) +
                                "' acts on a single qubit");
  }
}

GateId Circuit::add(Gate g) {
  check_qubits(g);
  g.id = gates_.size();
  gates_.push_back(std::move(g));
  return gates_.back().id;
}

void Circuit::push_raw(Gate g) {
  check_qubits(g);
  gates_.push_back(std::move(g));
}

std::size_t Circuit::count_two_qubit() const {
  return static_cast<std::size_t>(std::count_if(
      gates_.begin(), gates_.end(),
      [](const Gate& g) { return g.is_two_qubit(); }));
}

std::size_t Circuit::count(GateKind kind) const {
  return static_cast<std::size_t>(std::count_if(
      gates_.begin(), gates_.end(),
      [kind](const Gate& g) { return g.kind == kind; }));
}

bool operator==(const Circuit& a, const Circuit& b) {
  if (a.num_qubits_ != b.num_qubits_ || a.gates_.size() != b.gates_.size()) {
    return false;
  }
  for (std::size_t i = 0; i < a.gates_.size(); ++i) {
    if (!a.gates_[i].same_operation(b.gates_[i]) ||
        a.gates_[i].id != b.gates_[i].id) {
      return false;
    }
  }
  return true;
}

Circuit reverse(const Circuit& c) {
  Circuit out(c.num_qubits());
  for (auto it = c.gates().rbegin(); it != c.gates().rend(); ++it) {
    out.push_raw(*it);
  }
  return out;
}

Circuit lower_swaps(const Circuit& c) {
  Circuit out(c.num_qubits());
  for (const Gate& g : c) {
    if (g.kind == GateKind::Swap) {
      out.add_cnot(g.q0, g.q1);
      out.add_cnot(g.q1, g.q0);
      out.add_cnot(g.q0, g.q1);
    } else {
      Gate copy = g;
      out.add(std::move(copy));
    }
  }
  return out;
}

// --- DependencyGraph ------------------------------------------------------

DependencyGraph::DependencyGraph(std::span<const Gate> gates)
    : is_node_(gates.size(), false),
      preds_(gates.size()),
      succs_(gates.size()),
      trailing_(gates.size()) {
  constexpr std::size_t kNone = static_cast<std::size_t>(-1);
  Qubit max_qubit = 0;
  for (const Gate& g : gates) {
    max_qubit = std::max({max_qubit, g.q0, g.q1});
  }
  std::vector<std::size_t> last(gates.empty() ? 0 : max_qubit + 1, kNone);

  for (std::size_t pos = 0; pos < gates.size(); ++pos) {
    const Gate& g = gates[pos];
    if (!g.is_two_qubit()) {
      const std::size_t anchor = last[g.q0];
      if (anchor == kNone) {
        leading_.push_back(pos);
      } else {
        trailing_[anchor].push_back(pos);
      }
      continue;
    }
    is_node_[pos] = true;
    nodes_.push_back(pos);
    for (Qubit q : {g.q0, g.q1}) {
      const std::size_t prev = last[q];
      if (prev != kNone &&
          std::find(preds_[pos].begin(), preds_[pos].end(), prev) ==
              preds_[pos].end()) {
        preds_[pos].push_back(prev);
        succs_[prev].push_back(pos);
      }
      last[q] = pos;
    }
    std::sort(preds_[pos].begin(), preds_[pos].end());
  }
}

std::vector<std::size_t> DependencyGraph::front_layer(
    std::span<const std::size_t> executed) const {
  std::vector<bool> done(is_node_.size(), false);
  for (std::size_t pos : executed) {
    if (pos >= is_node_.size() || !is_node_[pos]) {
      throw std::invalid_argument("executed set names position " +
                                  std::to_string(pos) +
                                  ", which is not a two-qubit gate");
    }
    done[pos] = true;
  }
  for (std::size_t pos : executed) {
    for (std::size_t p : preds_[pos]) {
      if (!done[p]) {
        throw std::invalid_argument(
            "executed set is not downward-closed: gate at " +
            std::to_string(pos) + " depends on unexecuted gate at " +
            std::to_string(p));
      }
    }
  }
  std::vector<std::size_t> front;
  for (std::size_t pos : nodes_) {
    if (done[pos]) continue;
    if (std::all_of(preds_[pos].begin(), preds_[pos].end(),
                    [&](std::size_t p) { return done[p]; })) {
      front.push_back(pos);
    }
  }
  return front;
}

// --- FrontCursor ----------------------------------------------------------

FrontCursor::FrontCursor(const DependencyGraph& dg) : FrontCursor(dg, 0) {}

FrontCursor::FrontCursor(const DependencyGraph& dg, std::size_t first)
    : dg_(&dg),
      pending_(dg.num_positions(), 0),
      done_(dg.num_positions(), false) {
  for (std::size_t pos : dg.nodes()) {
    if (pos < first) {
      done_[pos] = true;
      continue;
    }
    ++remaining_;
    for (std::size_t p : dg.predecessors(pos)) {
      if (p >= first) ++pending_[pos];
    }
    if (pending_[pos] == 0) front_.push_back(pos);
  }
}

namespace {

void sorted_insert(std::vector<std::size_t>& v, std::size_t x) {
  v.insert(std::lower_bound(v.begin(), v.end(), x), x);
}

void sorted_erase(std::vector<std::size_t>& v, std::size_t x) {
  auto it = std::lower_bound(v.begin(), v.end(), x);
  if (it != v.end() && *it == x) v.erase(it);
}

}  // namespace

void FrontCursor::execute(std::size_t pos) {
  if (done_[pos] || pending_[pos] != 0) {
    throw std::logic_error("gate at position " + std::to_string(pos) +
                           " is not in the front layer");
  }
  done_[pos] = true;
  --remaining_;
  sorted_erase(front_, pos);
  for (std::size_t s : dg_->successors(pos)) {
    if (--pending_[s] == 0) sorted_insert(front_, s);
  }
}

void FrontCursor::undo(std::size_t pos) {
  for (std::size_t s : dg_->successors(pos)) {
    if (pending_[s]++ == 0) sorted_erase(front_, s);
  }
  done_[pos] = false;
  ++remaining_;
  sorted_insert(front_, pos);
}

// --- InteractionGraph -----------------------------------------------------

bool InteractionGraph::add_edge(Qubit a, Qubit b) {
  if (a == b) {
    throw std::invalid_argument("interaction graph edges need two qubits");
  }
  const Qubit hi = std::max(a, b);
  if (hi >= adjacency_.size()) adjacency_.resize(hi + 1);
  if (has_edge(a, b)) return false;
  adjacency_[a].push_back(b);
  adjacency_[b].push_back(a);
  edges_.emplace_back(std::min(a, b), hi);
  return true;
}

bool InteractionGraph::has_edge(Qubit a, Qubit b) const {
  if (a >= adjacency_.size() || b >= adjacency_.size()) return false;
  const auto& small =
      adjacency_[a].size() <= adjacency_[b].size() ? adjacency_[a]
                                                   : adjacency_[b];
  const Qubit other = (&small == &adjacency_[a]) ? b : a;
  return std::find(small.begin(), small.end(), other) != small.end();
}

std::vector<Qubit> InteractionGraph::nodes() const {
  std::vector<Qubit> out;
  for (Qubit q = 0; q < adjacency_.size(); ++q) {
    if (!adjacency_[q].empty()) out.push_back(q);
  }
  return out;
}

std::size_t InteractionGraph::num_nodes() const {
  return static_cast<std::size_t>(
      std::count_if(adjacency_.begin(), adjacency_.end(),
                    [](const auto& adj) { return !adj.empty(); }));
}

bool operator==(const InteractionGraph& a, const InteractionGraph& b) {
  auto sorted = [](const InteractionGraph& g) {
    auto e = g.edges_;
    std::sort(e.begin(), e.end());
    return e;
  };
  return sorted(a) == sorted(b);
}

InteractionGraph interaction_graph(std::span<const Gate> gates,
                                   std::size_t num_qubits) {
  InteractionGraph ig(num_qubits);
  for (const Gate& g : gates) {
    if (g.is_two_qubit()) ig.add_edge(g.q0, g.q1);
  }
  return ig;
}

}  // namespace adac
