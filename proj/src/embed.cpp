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

#include "adac/embed.hpp"

#include <algorithm>
#include <deque>
#include <stdexcept>
#include <string>

#include "adac/log.hpp"

namespace adac {

namespace {

bool has_odd_cycle(const InteractionGraph& ig) {
  std::vector<int> colour(ig.num_qubits(), -1);
  std::deque<Qubit> queue;
  for (Qubit s = 0; s < ig.num_qubits(); ++s) {
    if (colour[s] >= 0 || ig.degree(s) == 0) continue;
    colour[s] = 0;
    queue.assign(1, s);
    while (!queue.empty()) {
      const Qubit q = queue.front();
      queue.pop_front();
      for (Qubit r : ig.neighbors(q)) {
        if (colour[r] < 0) {
          colour[r] = 1 - colour[q];
          queue.push_back(r);
        } else if (colour[r] == colour[q]) {
          return true;
        }
      }
    }
  }
  return false;
}

}  // namespace

bool is_embedding(const InteractionGraph& ig, const ArchGraph& ag,
                  const Mapping& m) {
  for (auto [a, b] : ig.edges()) {
    if (!m.placed(a) || !m.placed(b)) return false;
    if (!ag.is_edge(m.physical(a), m.physical(b))) return false;
  }
  return true;
}

SubgraphMatcher::SubgraphMatcher(const InteractionGraph& ig,
                                 const ArchGraph& ag, std::size_t budget)
    : ig_(ig),
      ag_(ag),
      budget_(budget),
      ig_degree_(ig.num_qubits()),
      current_(ig.num_qubits(), ag.num_vertices()) {
  const std::vector<Qubit> nodes = ig.nodes();
  for (Qubit q : nodes) ig_degree_[q] = ig.degree(q);

  if (nodes.size() > ag.num_vertices() || ig.edges().size() > ag.num_edges()) {
    plausible_ = false;
  } else {
    std::vector<std::size_t> ig_deg;
    std::vector<std::size_t> ag_deg;
    for (Qubit q : nodes) ig_deg.push_back(ig.degree(q));
    for (Vertex v = 0; v < ag.num_vertices(); ++v) ag_deg.push_back(ag.degree(v));
    std::sort(ig_deg.rbegin(), ig_deg.rend());
    std::sort(ag_deg.rbegin(), ag_deg.rend());
    for (std::size_t i = 0; i < ig_deg.size(); ++i) {
      if (ig_deg[i] > ag_deg[i]) plausible_ = false;
    }
    if (plausible_ && ag.is_bipartite() && has_odd_cycle(ig)) {
      plausible_ = false;
    }
  }

  // Connectivity-first matching order.
  std::vector<bool> ordered(ig.num_qubits(), false);
  std::vector<std::size_t> links(ig.num_qubits(), 0);
  for (std::size_t step = 0; step < nodes.size(); ++step) {
    Qubit pick = kNoQubit;
    for (Qubit q : nodes) {
      if (ordered[q]) continue;
      if (pick == kNoQubit || links[q] > links[pick] ||
          (links[q] == links[pick] && ig_degree_[q] > ig_degree_[pick])) {
        pick = q;
      }
    }
    Qubit parent = kNoQubit;
    for (Qubit p : order_) {
      if (ig.has_edge(p, pick)) {
        parent = p;
        break;
      }
    }
    ordered[pick] = true;
    order_.push_back(pick);
    parent_.push_back(parent);
    for (Qubit r : ig.neighbors(pick)) ++links[r];
  }
}

bool SubgraphMatcher::feasible(Qubit x, Vertex v) const {
  if (current_.occupied(v) || ag_.degree(v) < ig_degree_[x]) return false;
  std::size_t unmatched = 0;
  for (Qubit y : ig_.neighbors(x)) {
    if (current_.placed(y)) {
      if (!ag_.is_edge(v, current_.physical(y))) return false;
    } else {
      ++unmatched;
    }
  }
  if (unmatched == 0) return true;
  std::size_t free = 0;
  for (Vertex w : ag_.neighbors(v)) {
    if (!current_.occupied(w)) ++free;
  }
  return unmatched <= free;
}

std::vector<Vertex> SubgraphMatcher::candidates(std::size_t depth) const {
  const Qubit parent = parent_[depth];
  if (parent != kNoQubit) return ag_.neighbors(current_.physical(parent));
  std::vector<Vertex> all(ag_.num_vertices());
  for (Vertex v = 0; v < all.size(); ++v) all[v] = v;
  return all;
}

bool SubgraphMatcher::search(
    std::size_t depth, const std::function<bool(const Mapping&)>& visit) {
  if (depth == order_.size()) return visit(current_);
  const Qubit x = order_[depth];
  for (Vertex v : candidates(depth)) {
    if (++steps_ > budget_) {
      exhausted_ = true;
      return false;
    }
    if (!feasible(x, v)) continue;
    current_.place(x, v);
    const bool keep_going = search(depth + 1, visit);
    current_.unplace(x);
    if (!keep_going) return false;
  }
  return true;
}

bool SubgraphMatcher::for_each(
    const std::function<bool(const Mapping&)>& visit) {
  if (!plausible_) return true;
  search(0, visit);
  return !exhausted_;
}

void SubgraphMatcher::search_best(std::size_t depth, std::uint64_t partial) {
  if (exhausted_) return;
  if (best_ && partial > best_cost_) return;
  if (depth == order_.size()) {
    if (!best_ || partial < best_cost_ ||
        current_.forward() < best_->forward()) {
      best_ = current_;
      best_cost_ = partial;
    }
    return;
  }
  const Qubit x = order_[depth];
  const Vertex home = anchor_->physical(x);
  std::vector<Vertex> cands = candidates(depth);
  std::stable_sort(cands.begin(), cands.end(), [&](Vertex a, Vertex b) {
    return ag_.hops(a, home) < ag_.hops(b, home);
  });
  for (Vertex v : cands) {
    if (++steps_ > budget_) {
      exhausted_ = true;
      return;
    }
    if (!feasible(x, v)) continue;
    current_.place(x, v);
    search_best(depth + 1, partial + ag_.hops(v, home));
    current_.unplace(x);
    if (exhausted_) return;
  }
}

std::optional<Mapping> SubgraphMatcher::best(const Mapping& anchor) {
  for (Qubit q : order_) {
    if (!anchor.placed(q)) {
      throw std::invalid_argument("anchor mapping leaves qubit " +
                                  std::to_string(q) + " unplaced");
    }
  }
  if (!plausible_) return std::nullopt;
  anchor_ = &anchor;
  best_.reset();
  search_best(0, 0);
  anchor_ = nullptr;
  return best_;
}

bool is_embeddable(const InteractionGraph& ig, const ArchGraph& ag,
                   std::size_t budget) {
  SubgraphMatcher matcher(ig, ag, budget);
  if (!matcher.plausible()) return false;
  bool found = false;
  matcher.for_each([&](const Mapping&) {
    found = true;
    return false;
  });
  if (!found && matcher.budget_exhausted()) {
    log_warning("subgraph matcher budget of " + std::to_string(budget) +
                " steps exhausted; treating graph with " +
                std::to_string(ig.num_nodes()) + " nodes as not embeddable");
  }
  return found;
}

std::vector<Mapping> enumerate_embeddings(const InteractionGraph& ig,
                                          const ArchGraph& ag,
                                          std::size_t limit,
                                          std::size_t budget) {
  if (limit == 0) {
    throw std::invalid_argument("enumerate_embeddings needs limit >= 1");
  }
  std::vector<Mapping> out;
  SubgraphMatcher matcher(ig, ag, budget);
  matcher.for_each([&](const Mapping& m) {
    out.push_back(m);
    return out.size() < limit;
  });
  return out;
}

std::optional<Mapping> best_embedding(const InteractionGraph& ig,
                                      const ArchGraph& ag,
                                      const Mapping& anchor,
                                      std::size_t budget) {
  SubgraphMatcher matcher(ig, ag, budget);
  auto result = matcher.best(anchor);
  if (matcher.budget_exhausted()) {
    log_warning("embedding selection stopped at its step budget; using the "
                "best embedding found so far");
  }
#ifndef NDEBUG
  if (result && !is_embedding(ig, ag, *result)) {
    throw std::logic_error("best_embedding produced a non-embedding");
  }
#endif
  return result;
}

IncrementalEmbedder::IncrementalEmbedder(const ArchGraph& ag,
                                         std::size_t num_qubits,
                                         std::size_t budget)
    : ag_(&ag),
      budget_(budget),
      ig_(num_qubits),
      witness_(num_qubits, ag.num_vertices()) {}

bool IncrementalEmbedder::try_add(Qubit a, Qubit b) {
  if (ig_.has_edge(a, b)) return true;
  const ArchGraph& ag = *ag_;

  const bool pa = witness_.placed(a);
  const bool pb = witness_.placed(b);
  if (pa && pb && ag.is_edge(witness_.physical(a), witness_.physical(b))) {
    ig_.add_edge(a, b);
    return true;
  }
  if (pa != pb) {
    const Qubit fixed = pa ? a : b;
    const Qubit loose = pa ? b : a;
    for (Vertex w : ag.neighbors(witness_.physical(fixed))) {
      if (!witness_.occupied(w)) {
        witness_.place(loose, w);
        ig_.add_edge(a, b);
        return true;
      }
    }
  }
  if (!pa && !pb) {
    for (auto [u, v] : ag.edges()) {
      if (!witness_.occupied(u) && !witness_.occupied(v)) {
        witness_.place(a, u);
        witness_.place(b, v);
        ig_.add_edge(a, b);
        return true;
      }
    }
  }

  InteractionGraph trial = ig_;
  trial.add_edge(a, b);
  SubgraphMatcher matcher(trial, ag, budget_);
  std::optional<Mapping> found;
  if (matcher.plausible()) {
    matcher.for_each([&](const Mapping& m) {
      found = m;
      return false;
    });
  }
  if (!found) return false;
  ig_ = std::move(trial);
  witness_ = std::move(*found);
  return true;
}

std::uint64_t embedding_distance(const InteractionGraph& ig,
                                 const ArchGraph& ag, const Mapping& m,
                                 const Mapping& anchor) {
  std::uint64_t total = 0;
  for (Qubit q : ig.nodes()) total += ag.hops(m.at(q), anchor.at(q));
  return total;
}

}  // namespace adac
