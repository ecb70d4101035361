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
#include <optional>
#include <string>
#include <vector>

#include <json.hpp>

#include "adac/arch.hpp"
#include "adac/circuit.hpp"
#include "adac/route.hpp"

namespace adac {

/// Pseudo-realistic circuit shape: blocks of `l_g` CNOTs over a sliding
/// active set of `l_q` qubits.
struct GenSpec {
  std::size_t num_qubits = 0;
  std::size_t l_q = 0;
  std::size_t l_g = 0;
  std::uint64_t seed = 0;
};

struct GenBlock {
  std::vector<Qubit> active;  ///< ascending
  std::size_t first_gate = 0;
  std::size_t num_gates = 0;
};

struct GeneratedCircuit {
  Circuit circuit;
  std::vector<GenBlock> blocks;
};

/// Starts from `l_q` random qubits; each block adds `l_g` CNOTs on uniformly
/// drawn ordered pairs of distinct active qubits, then one random active
/// qubit is replaced by a random unused one, until every qubit has been used.
/// Throws std::invalid_argument unless 2 <= l_q <= num_qubits and l_g >= 1.
GeneratedCircuit generate_pseudo_realistic(const GenSpec& spec);

/// (n_com - n_our) / n_com; 0 when both are 0 and nullopt ("undefined")
/// when only the baseline is 0.
std::optional<double> improvement(std::size_t n_our, std::size_t n_com);

struct BenchCase {
  std::string name;
  Circuit circuit;
  /// Set when the circuit could not be loaded.
  std::string error;
};

/// `count` generated circuits; circuit i uses stream i of `seed`.
std::vector<BenchCase> generate_corpus(std::size_t num_qubits, std::size_t l_q,
                                       std::size_t l_g, std::size_t count,
                                       std::uint64_t seed);

/// Every *.qasm file in `dir`, sorted by name. Unparsable files become
/// cases with `error` set.
std::vector<BenchCase> load_corpus(const std::string& dir);

struct BenchRow {
  std::string name;
  std::size_t qubits = 0;
  std::size_t cnot_count = 0;
  std::size_t swaps_adac = 0;
  std::size_t swaps_baseline = 0;
  std::optional<double> rho;
  double wall_ms_adac = 0;
  double wall_ms_baseline = 0;
  std::size_t fallbacks = 0;
  /// Longest per-division SWAP sequence in the ADAC result.
  std::size_t max_division_swaps = 0;
  bool valid = false;
  std::string error;
};

struct BenchReport {
  std::string arch;
  AdacParams params;
  std::vector<BenchRow> rows;
  std::size_t total_adac = 0;
  std::size_t total_baseline = 0;
  std::optional<double> aggregate_rho;

  [[nodiscard]] bool all_valid() const;
};

/// Routes each case with ADAC and the baseline, verifies both outputs and
/// aggregates. Rows are sorted by name; `threads` = 0 uses the hardware
/// concurrency.
BenchReport run_suite(const std::vector<BenchCase>& cases, const ArchGraph& ag,
                      const AdacParams& params, std::size_t threads = 0);

nlohmann::json to_json(const BenchReport& report);
std::string to_table(const BenchReport& report);
std::string to_csv(const BenchReport& report);

}  // namespace adac
