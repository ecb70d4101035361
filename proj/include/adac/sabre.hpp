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
#include <utility>

#include "adac/arch.hpp"
#include "adac/circuit.hpp"
#include "adac/mapping.hpp"
#include "adac/routed.hpp"

namespace adac {

struct SabreParams {
  std::size_t extended_window = 20;
  double extended_weight = 0.5;
  double decay_increment = 0.001;
  std::size_t decay_reset_interval = 5;
  std::size_t trials = 5;
  std::uint64_t seed = 0x5ab4e5eedULL;
};

/// Look-ahead SWAP router. Trial 0 breaks score ties by the smallest edge;
/// later trials break exact ties at random from a stream derived from
/// `p.seed` and the trial index.
RoutedHalf sabre_route(const Circuit& lc, const Mapping& m0,
                       const ArchGraph& ag, const SabreParams& p = {},
                       std::size_t trial = 0);

/// Alternates forward and backward routing passes from the trivial placement
/// and returns the initial and final mappings of the last forward pass.
std::pair<Mapping, Mapping> reverse_traversal_mapping(
    const Circuit& lc, const ArchGraph& ag, std::size_t t_ini,
    const SabreParams& p = {}, std::size_t trial = 0);

/// Baseline router: reverse traversal plus routing, best of `p.trials` runs.
RoutedCircuit sabre(const Circuit& lc, const ArchGraph& ag,
                    const SabreParams& p = {}, std::size_t t_ini = 3);

}  // namespace adac
