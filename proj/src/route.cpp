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

#include "adac/route.hpp"

#include <algorithm>
#include <limits>
#include <string>

namespace adac {

double DacScore::value() const {
  if (infinite()) return std::numeric_limits<double>::infinity();
  return static_cast<double>(gates) / static_cast<double>(swaps);
}

bool operator>(const DacScore& a, const DacScore& b) {
  if (a.infinite() != b.infinite()) return a.infinite();
  if (!a.infinite()) {
    const auto lhs = static_cast<std::uint64_t>(a.gates) * b.swaps;
    const auto rhs = static_cast<std::uint64_t>(b.gates) * a.swaps;
    if (lhs != rhs) return lhs > rhs;
  }
  return a.gates > b.gates;
}

AdaptiveRouter::AdaptiveRouter(const Circuit& lc, const ArchGraph& ag,
                               AdacParams params)
    : lc_(lc), ag_(ag), params_(params), dg_(lc) {}

std::optional<SwapSeq> AdaptiveRouter::swaps_for(const std::vector<Gate>& gates,
                                                 const Mapping& m,
                                                 std::size_t t_s) {
  ++swap_searches_;
  return search_swaps(gates, m, ag_, t_s, params_.swap_budget, true).swaps;
}

std::optional<DacStep> AdaptiveRouter::heuristic_dac(const FrontCursor& start,
                                                     const Mapping& m,
                                                     std::size_t t_d,
                                                     std::size_t t_s) {
  FrontCursor cursor = start;
  IncrementalEmbedder emb(ag_, lc_.num_qubits(), params_.match_budget);
  std::vector<std::size_t> cur;
  std::vector<Gate> cur_gates;
  SwapSeq cur_swaps;
  std::vector<bool> traversed(lc_.size(), false);
  std::optional<DacStep> best;

  for (;;) {
    std::size_t pick = lc_.size();
    std::uint32_t pick_dist = 0;
    for (std::size_t pos : cursor.front()) {
      if (traversed[pos]) continue;
      const std::uint32_t d = swap_distance_lower_bound(ag_, lc_[pos], m);
      if (pick == lc_.size() || d < pick_dist) {
        pick = pos;
        pick_dist = d;
      }
    }
    if (pick == lc_.size()) break;

    const Gate& g = lc_[pick];
    std::optional<SwapSeq> s;
    if (emb.graph().has_edge(g.q0, g.q1)) {
      // Same interaction graph, so the same SWAPs still work.
      s = cur_swaps;
    } else {
      IncrementalEmbedder grown = emb;
      if (grown.try_add(g.q0, g.q1)) {
        cur_gates.push_back(g);
        s = swaps_for(cur_gates, m, t_s);
        cur_gates.pop_back();
        if (s) emb = std::move(grown);
      }
    }
    if (!s) {
      traversed[pick] = true;
      continue;
    }

    cursor.execute(pick);
    cur.push_back(pick);
    cur_gates.push_back(g);
    cur_swaps = std::move(*s);

    DacScore score{cur.size(), cur_swaps.size()};
    if (t_d > 1 && !cursor.exhausted()) {
      Mapping next_m = m;
      for (const Edge& e : cur_swaps) apply_swap_inplace(next_m, ag_, e);
      if (auto next = heuristic_dac(cursor, next_m, t_d - 1, t_s)) {
        score.gates += next->gates.size();
        score.swaps += next->swaps.size();
      }
    }
    // Prefixes only grow, so on equal scores the longer division wins.
    if (!best || !(best->score > score)) best = DacStep{cur, cur_swaps, score};
  }
  return best;
}

RoutedHalf AdaptiveRouter::route(const Mapping& m0) {
  RoutedHalf half;
  half.initial_mapping = m0;
  half.final_mapping = m0;
  if (lc_.empty()) return half;
  if (dg_.num_nodes() == 0) {
    RoutedDivision only;
    for (std::size_t pos = 0; pos < lc_.size(); ++pos) only.gates.push_back(pos);
    half.divisions.push_back(std::move(only));
    return half;
  }

  FrontCursor cursor(dg_);
  Mapping m = m0;
  while (!cursor.exhausted()) {
    auto step = heuristic_dac(cursor, m, params_.t_d, params_.t_s);
    if (!step) {
      ++half.fallbacks;
      step = heuristic_dac(cursor, m, params_.t_d, 2 * params_.t_s);
    }
    if (!step) {
      throw RoutingError("no front gate can be routed within " +
                         std::to_string(2 * params_.t_s) + " SWAPs");
    }
    RoutedDivision div;
    div.swaps = std::move(step->swaps);
    for (const Edge& e : div.swaps) apply_swap_inplace(m, ag_, e);
    if (half.divisions.empty()) div.gates = dg_.leading_singles();
    for (std::size_t pos : step->gates) {
      cursor.execute(pos);
      div.gates.push_back(pos);
      const auto& trailing = dg_.trailing_singles(pos);
      div.gates.insert(div.gates.end(), trailing.begin(), trailing.end());
    }
    half.divisions.push_back(std::move(div));
  }
  half.final_mapping = m;
  return half;
}

std::optional<DacStep> heuristic_dac(const Circuit& lc, const Mapping& m,
                                     const ArchGraph& ag, std::size_t t_d,
                                     std::size_t t_s) {
  AdacParams params;
  params.t_d = t_d;
  params.t_s = t_s;
  AdaptiveRouter router(lc, ag, params);
  return router.heuristic_dac(FrontCursor(router.dependency_graph()), m, t_d,
                              t_s);
}

RoutedHalf adaptive_routing(const Circuit& lc, const Mapping& m0,
                            const ArchGraph& ag, const AdacParams& params) {
  AdaptiveRouter router(lc, ag, params);
  return router.route(m0);
}

Mapping extend_mapping(const Mapping& emb, const Mapping& anchor,
                       const ArchGraph& ag) {
  Mapping out = emb;
  for (Qubit q = 0; q < out.num_qubits(); ++q) {
    if (out.placed(q)) continue;
    const Vertex home = anchor.at(q);
    Vertex pick = kNoVertex;
    for (Vertex v = 0; v < ag.num_vertices(); ++v) {
      if (out.occupied(v)) continue;
      if (pick == kNoVertex || ag.hops(v, home) < ag.hops(pick, home)) {
        pick = v;
      }
    }
    out.place(q, pick);
  }
  return out;
}

namespace {

std::size_t count_two_qubit(const Circuit& c,
                            const std::vector<std::size_t>& positions) {
  return static_cast<std::size_t>(
      std::count_if(positions.begin(), positions.end(),
                    [&](std::size_t p) { return c[p].is_two_qubit(); }));
}

}  // namespace

RoutedCircuit adac(const Circuit& input, const ArchGraph& ag,
                   const AdacParams& params) {
  const Circuit lc = prepare_logical(input, ag);
  const std::size_t n = lc.num_qubits();

  Division div = max_subgraph_division(lc, ag, params.match_budget);
  const auto [beg, fin] =
      reverse_traversal_mapping(lc, ag, params.t_ini, params.sabre);
  const std::size_t pre_2q = count_two_qubit(lc, div.pre);
  const std::size_t post_2q = count_two_qubit(lc, div.post);
  const Mapping& anchor = pre_2q > post_2q ? beg : fin;

  const InteractionGraph mid_ig =
      interaction_graph(subcircuit(lc, div.mid));
  Mapping emb(n, ag.num_vertices());
  if (mid_ig.num_nodes() > 0) {
    auto found = best_embedding(mid_ig, ag, anchor, params.match_budget);
    if (!found) {
      throw std::logic_error("middle part of the division has no embedding");
    }
    emb = std::move(*found);
  }
  const Mapping tau_ini = extend_mapping(emb, anchor, ag);

  const Circuit right = subcircuit(lc, div.post);
  Circuit left(n);
  for (auto it = div.pre.rbegin(); it != div.pre.rend(); ++it) {
    left.add(lc[*it]);
  }
  const RoutedHalf rr = adaptive_routing(right, tau_ini, ag, params);
  const RoutedHalf lr = adaptive_routing(left, tau_ini, ag, params);

  // The left half was routed backwards: replay its divisions last to first,
  // each one's gates reversed and its SWAPs undone after them.
  std::vector<RoutedDivision> steps;
  std::vector<DivisionSummary> summary;
  SwapSeq pending;
  const std::size_t k = div.pre.size();
  for (auto it = lr.divisions.rbegin(); it != lr.divisions.rend(); ++it) {
    RoutedDivision step;
    step.swaps = std::move(pending);
    for (auto g = it->gates.rbegin(); g != it->gates.rend(); ++g) {
      step.gates.push_back(div.pre[k - 1 - *g]);
    }
    pending.assign(it->swaps.rbegin(), it->swaps.rend());
    summary.push_back(
        {"pre", count_two_qubit(left, it->gates), it->swaps.size()});
    steps.push_back(std::move(step));
  }
  steps.push_back({div.mid, std::move(pending)});
  summary.push_back({"mid", count_two_qubit(lc, div.mid), 0});
  for (const RoutedDivision& d : rr.divisions) {
    RoutedDivision step;
    step.swaps = d.swaps;
    for (std::size_t g : d.gates) step.gates.push_back(div.post[g]);
    summary.push_back({"post", count_two_qubit(right, d.gates), d.swaps.size()});
    steps.push_back(std::move(step));
  }

  RoutedCircuit out = assemble(lc, ag, lr.final_mapping, steps);
  out.router = "adac";
  out.divisions = std::move(summary);
  out.initial_division = std::move(div);
  out.fallbacks = lr.fallbacks + rr.fallbacks;
  return out;
}

}  // namespace adac
