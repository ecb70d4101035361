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

#include "adac/sabre.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

#include "adac/rng.hpp"

namespace adac {

namespace {

class SabreRun {
 public:
  SabreRun(const Circuit& lc, const ArchGraph& ag, const SabreParams& p,
           std::size_t trial)
      : lc_(lc),
        ag_(ag),
        p_(p),
        trial_(trial),
        dg_(lc),
        rng_(Rng::stream_seed(p.seed, trial)),
        stamp_(lc.size(), 0) {}

  RoutedHalf route(const Mapping& m0) {
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
    std::vector<double> decay(ag_.num_vertices(), 1.0);
    RoutedDivision div;
    div.gates = dg_.leading_singles();
    std::size_t stale = 0;
    std::size_t since_exec = 0;
    std::size_t since_reset = 0;
    const std::size_t force_after = 3 * ag_.diameter() + 10;

    while (!cursor.exhausted()) {
      bool executed = false;
      for (bool progress = true; progress;) {
        progress = false;
        const std::vector<std::size_t> front = cursor.front();
        for (std::size_t pos : front) {
          if (swap_distance_lower_bound(ag_, lc_[pos], m) != 0) continue;
          cursor.execute(pos);
          div.gates.push_back(pos);
          const auto& trailing = dg_.trailing_singles(pos);
          div.gates.insert(div.gates.end(), trailing.begin(), trailing.end());
          progress = executed = true;
        }
      }
      if (executed) {
        half.divisions.push_back(std::move(div));
        div = RoutedDivision{};
        std::fill(decay.begin(), decay.end(), 1.0);
        stale = since_exec = since_reset = 0;
        continue;
      }

      const std::vector<std::size_t>& front = cursor.front();
      const std::vector<std::size_t> extended = extended_set(cursor);
      const double h_now = heuristic(front, extended, m);

      std::vector<Edge> candidates;
      for (std::size_t pos : front) {
        for (Qubit q : {lc_[pos].q0, lc_[pos].q1}) {
          const Vertex v = m.physical(q);
          for (Vertex w : ag_.neighbors(v)) {
            candidates.emplace_back(std::min(v, w), std::max(v, w));
          }
        }
      }
      std::sort(candidates.begin(), candidates.end());
      candidates.erase(std::unique(candidates.begin(), candidates.end()),
                       candidates.end());

      std::vector<double> scores;
      double best_score = 0;
      double best_plain = 0;
      for (const Edge& e : candidates) {
        m.swap_vertices(e.first, e.second);
        const double h = heuristic(front, extended, m);
        m.swap_vertices(e.first, e.second);
        const double sc = std::max(decay[e.first], decay[e.second]) * h;
        scores.push_back(sc);
        if (scores.size() == 1 || sc < best_score) {
          best_score = sc;
          best_plain = h;
        }
      }
      std::vector<std::size_t> ties;
      for (std::size_t i = 0; i < scores.size(); ++i) {
        if (scores[i] <= best_score + 1e-12 * std::max(1.0, best_score)) {
          ties.push_back(i);
        }
      }
      std::size_t chosen = ties.front();
      if (trial_ > 0 && ties.size() > 1) {
        chosen = ties[rng_.below(ties.size())];
      }
      Edge e = candidates[chosen];

      if (best_plain < h_now - 1e-12) {
        stale = 0;
      } else {
        ++stale;
      }
      if (stale >= p_.decay_reset_interval || since_exec >= force_after) {
        e = forced_swap(front, m);
        stale = 0;
      }

      m.swap_vertices(e.first, e.second);
      div.swaps.push_back(e);
      ++since_exec;
      decay[e.first] += p_.decay_increment;
      decay[e.second] += p_.decay_increment;
      if (++since_reset >= p_.decay_reset_interval) {
        std::fill(decay.begin(), decay.end(), 1.0);
        since_reset = 0;
      }
    }
    if (!div.gates.empty() || !div.swaps.empty()) {
      half.divisions.push_back(std::move(div));
    }
    half.final_mapping = m;
    return half;
  }

 private:
  // Up to `extended_window` not-yet-executed successors of the front layer,
  // breadth first.
  std::vector<std::size_t> extended_set(const FrontCursor& cursor) {
    ++epoch_;
    std::vector<std::size_t> out;
    std::vector<std::size_t> queue = cursor.front();
    for (std::size_t pos : queue) stamp_[pos] = epoch_;
    for (std::size_t i = 0;
         i < queue.size() && out.size() < p_.extended_window; ++i) {
      for (std::size_t next : dg_.successors(queue[i])) {
        if (stamp_[next] == epoch_ || cursor.done(next)) continue;
        stamp_[next] = epoch_;
        queue.push_back(next);
        out.push_back(next);
        if (out.size() == p_.extended_window) break;
      }
    }
    return out;
  }

  double heuristic(const std::vector<std::size_t>& front,
                   const std::vector<std::size_t>& extended,
                   const Mapping& m) const {
    double f = 0;
    for (std::size_t pos : front) {
      f += ag_.hops(m.physical(lc_[pos].q0), m.physical(lc_[pos].q1));
    }
    double h = f / static_cast<double>(front.size());
    if (!extended.empty()) {
      double x = 0;
      for (std::size_t pos : extended) {
        x += ag_.hops(m.physical(lc_[pos].q0), m.physical(lc_[pos].q1));
      }
      h += p_.extended_weight * x / static_cast<double>(extended.size());
    }
    return h;
  }

  // Moves the control of the closest front gate one hop towards its target.
  Edge forced_swap(const std::vector<std::size_t>& front,
                   const Mapping& m) const {
    std::size_t pick = front.front();
    std::uint32_t pick_dist = swap_distance_lower_bound(ag_, lc_[pick], m);
    for (std::size_t pos : front) {
      const std::uint32_t d = swap_distance_lower_bound(ag_, lc_[pos], m);
      if (d < pick_dist) {
        pick = pos;
        pick_dist = d;
      }
    }
    const Vertex a = m.physical(lc_[pick].q0);
    const Vertex b = ag_.step_towards(a, m.physical(lc_[pick].q1));
    return {std::min(a, b), std::max(a, b)};
  }

  const Circuit& lc_;
  const ArchGraph& ag_;
  const SabreParams& p_;
  std::size_t trial_;
  DependencyGraph dg_;
  Rng rng_;
  std::vector<std::size_t> stamp_;
  std::size_t epoch_ = 0;
};

}  // namespace

RoutedHalf sabre_route(const Circuit& lc, const Mapping& m0,
                       const ArchGraph& ag, const SabreParams& p,
                       std::size_t trial) {
  for (const Gate& g : lc) {
    for (Qubit q : {g.q0, g.q1}) {
      if (!m0.placed(q)) {
        throw std::invalid_argument("initial mapping leaves qubit " +
                                    std::to_string(q) + " unplaced");
      }
    }
  }
  SabreRun run(lc, ag, p, trial);
  return run.route(m0);
}

std::pair<Mapping, Mapping> reverse_traversal_mapping(const Circuit& lc,
                                                      const ArchGraph& ag,
                                                      std::size_t t_ini,
                                                      const SabreParams& p,
                                                      std::size_t trial) {
  if (t_ini == 0) throw std::invalid_argument("t_ini must be at least 1");
  const Circuit backward = reverse(lc);
  Mapping m = Mapping::trivial(lc.num_qubits(), ag.num_vertices());
  Mapping beg;
  Mapping fin;
  for (std::size_t round = 0; round < t_ini; ++round) {
    beg = m;
    fin = sabre_route(lc, beg, ag, p, trial).final_mapping;
    if (round + 1 < t_ini) {
      m = sabre_route(backward, fin, ag, p, trial).final_mapping;
    }
  }
  return {beg, fin};
}

RoutedCircuit sabre(const Circuit& input, const ArchGraph& ag,
                    const SabreParams& p, std::size_t t_ini) {
  const Circuit lc = prepare_logical(input, ag);
  std::optional<RoutedHalf> best;
  for (std::size_t trial = 0; trial < std::max<std::size_t>(p.trials, 1);
       ++trial) {
    const Mapping start = reverse_traversal_mapping(lc, ag, t_ini, p, trial).first;
    RoutedHalf half = sabre_route(lc, start, ag, p, trial);
    if (!best || half.swap_count() < best->swap_count()) best = std::move(half);
  }
  RoutedCircuit out =
      assemble(lc, ag, best->initial_mapping, best->divisions);
  out.router = "sabre";
  out.fallbacks = 0;
  return out;
}

}  // namespace adac
