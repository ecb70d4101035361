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

#include "adac/bench.hpp"

#include <algorithm>
#include <atomic>
#include <chrono>
#include <filesystem>
#include <iomanip>
#include <sstream>
#include <stdexcept>
#include <thread>

#include "adac/divide.hpp"
#include "adac/qasm.hpp"
#include "adac/rng.hpp"
#include "adac/sabre.hpp"
#include "adac/verify.hpp"

namespace adac {

GeneratedCircuit generate_pseudo_realistic(const GenSpec& spec) {
  if (spec.l_q < 2 || spec.l_q > spec.num_qubits || spec.l_g < 1) {
    throw std::invalid_argument(
        "pseudo-realistic circuits need 2 <= l_q <= num_qubits and l_g >= 1");
  }
  Rng rng(spec.seed);
  std::vector<Qubit> unused(spec.num_qubits);
  for (Qubit q = 0; q < unused.size(); ++q) unused[q] = q;
  auto take = [&] {
    const auto k = static_cast<std::ptrdiff_t>(rng.below(unused.size()));
    const Qubit q = unused[k];
    unused.erase(unused.begin() + k);
    return q;
  };
  std::vector<Qubit> active;
  for (std::size_t i = 0; i < spec.l_q; ++i) active.push_back(take());

  GeneratedCircuit out{Circuit(spec.num_qubits), {}};
  for (;;) {
    GenBlock block;
    block.active = active;
    std::sort(block.active.begin(), block.active.end());
    block.first_gate = out.circuit.size();
    block.num_gates = spec.l_g;
    for (std::size_t g = 0; g < spec.l_g; ++g) {
      const std::uint64_t i = rng.below(spec.l_q);
      std::uint64_t j = rng.below(spec.l_q - 1);
      if (j >= i) ++j;
      out.circuit.add_cnot(active[i], active[j]);
    }
    out.blocks.push_back(std::move(block));
    if (unused.empty()) break;
    active[rng.below(spec.l_q)] = take();
  }
  return out;
}

std::optional<double> improvement(std::size_t n_our, std::size_t n_com) {
  if (n_com == 0) {
    if (n_our == 0) return 0.0;
    return std::nullopt;
  }
  return (static_cast<double>(n_com) - static_cast<double>(n_our)) /
         static_cast<double>(n_com);
}

std::vector<BenchCase> generate_corpus(std::size_t num_qubits, std::size_t l_q,
                                       std::size_t l_g, std::size_t count,
                                       std::uint64_t seed) {
  std::vector<BenchCase> out;
  for (std::size_t i = 0; i < count; ++i) {
    GenSpec spec{num_qubits, l_q, l_g, Rng::stream_seed(seed, i)};
    std::ostringstream name;
    name << "pr_n" << num_qubits << "_lq" << l_q << "_lg" << l_g << "_"
         << std::setw(3) << std::setfill('0') << i;
    out.push_back({name.str(), generate_pseudo_realistic(spec).circuit, {}});
  }
  return out;
}

std::vector<BenchCase> load_corpus(const std::string& dir) {
  if (!std::filesystem::is_directory(dir)) {
    throw std::invalid_argument(dir + " is not a directory");
  }
  std::vector<std::filesystem::path> files;
  for (const auto& entry : std::filesystem::directory_iterator(dir)) {
    if (entry.is_regular_file() && entry.path().extension() == ".qasm") {
      files.push_back(entry.path());
    }
  }
  std::sort(files.begin(), files.end());
  std::vector<BenchCase> out;
  for (const auto& f : files) {
    BenchCase c;
    c.name = f.stem().string();
    try {
      c.circuit = read_qasm_file(f.string());
    } catch (const std::exception& e) {
      c.error = e.what();
    }
    out.push_back(std::move(c));
  }
  return out;
}

bool BenchReport::all_valid() const {
  return std::all_of(rows.begin(), rows.end(),
                     [](const BenchRow& r) { return r.valid; });
}

namespace {

double elapsed_ms(std::chrono::steady_clock::time_point since) {
  return std::chrono::duration<double, std::milli>(
             std::chrono::steady_clock::now() - since)
      .count();
}

BenchRow run_case(const BenchCase& c, const ArchGraph& ag,
                  const AdacParams& params) {
  BenchRow row;
  row.name = c.name;
  if (!c.error.empty()) {
    row.error = c.error;
    return row;
  }
  row.qubits = c.circuit.num_qubits();
  row.cnot_count = c.circuit.count(GateKind::Cnot) + 3 * c.circuit.count(GateKind::Swap);
  try {
    auto t0 = std::chrono::steady_clock::now();
    const RoutedCircuit ours = adac(c.circuit, ag, params);
    row.wall_ms_adac = elapsed_ms(t0);
    t0 = std::chrono::steady_clock::now();
    const RoutedCircuit base = sabre(c.circuit, ag, params.sabre, params.t_ini);
    row.wall_ms_baseline = elapsed_ms(t0);

    row.swaps_adac = ours.swap_count;
    row.swaps_baseline = base.swap_count;
    row.rho = improvement(row.swaps_adac, row.swaps_baseline);
    row.fallbacks = ours.fallbacks;
    for (const DivisionSummary& d : ours.divisions) {
      row.max_division_swaps = std::max(row.max_division_swaps, d.swaps);
    }

    for (const auto* rc : {&ours, &base}) {
      if (!check_executability(*rc, ag)) {
        row.error = rc->router + " output is not executable";
        return row;
      }
      const EquivalenceReport eq = check_equivalence_report(c.circuit, *rc, ag);
      if (!eq.ok()) {
        row.error = rc->router + " output is not equivalent: " + eq.message;
        return row;
      }
    }
    row.valid = true;
  } catch (const std::exception& e) {
    row.error = e.what();
  }
  return row;
}

std::string format_rho(const std::optional<double>& rho) {
  if (!rho) return "undefined";
  std::ostringstream out;
  out << std::fixed << std::setprecision(2) << *rho * 100 << "%";
  return out.str();
}

}  // namespace

BenchReport run_suite(const std::vector<BenchCase>& cases, const ArchGraph& ag,
                      const AdacParams& params, std::size_t threads) {
  BenchReport report;
  report.arch = ag.name();
  report.params = params;
  report.rows.resize(cases.size());

  if (threads == 0) threads = std::max(1U, std::thread::hardware_concurrency());
  threads = std::min(threads, std::max<std::size_t>(cases.size(), 1));
  std::atomic<std::size_t> next{0};
  auto worker = [&] {
    for (std::size_t i = next++; i < cases.size(); i = next++) {
      report.rows[i] = run_case(cases[i], ag, params);
    }
  };
  if (threads <= 1) {
    worker();
  } else {
    std::vector<std::thread> pool;
    for (std::size_t t = 0; t < threads; ++t) pool.emplace_back(worker);
    for (auto& th : pool) th.join();
  }

  std::stable_sort(report.rows.begin(), report.rows.end(),
                   [](const BenchRow& a, const BenchRow& b) {
                     return a.name < b.name;
                   });
  for (const BenchRow& r : report.rows) {
    report.total_adac += r.swaps_adac;
    report.total_baseline += r.swaps_baseline;
  }
  report.aggregate_rho = improvement(report.total_adac, report.total_baseline);
  return report;
}

nlohmann::json to_json(const BenchReport& report) {
  auto rho_json = [](const std::optional<double>& rho) -> nlohmann::json {
    if (!rho) return "undefined";
    return *rho;
  };
  nlohmann::json rows = nlohmann::json::array();
  for (const BenchRow& r : report.rows) {
    nlohmann::json row = {
        {"name", r.name},
        {"qubits", r.qubits},
        {"cnot_count", r.cnot_count},
        {"swaps_adac", r.swaps_adac},
        {"swaps_baseline", r.swaps_baseline},
        {"rho", rho_json(r.rho)},
        {"wall_time_ms", {{"adac", r.wall_ms_adac}, {"baseline", r.wall_ms_baseline}}},
        {"fallbacks", r.fallbacks},
        {"max_division_swaps", r.max_division_swaps},
        {"valid", r.valid},
    };
    if (!r.error.empty()) row["error"] = r.error;
    rows.push_back(std::move(row));
  }
  return {
      {"arch", report.arch},
      {"baseline", "in-repo sabre"},
      {"params",
       {{"t_ini", report.params.t_ini},
        {"t_s", report.params.t_s},
        {"t_d", report.params.t_d}}},
      {"rows", rows},
      {"total_swaps_adac", report.total_adac},
      {"total_swaps_baseline", report.total_baseline},
      {"aggregate_rho", rho_json(report.aggregate_rho)},
      {"all_valid", report.all_valid()},
  };
}

std::string to_table(const BenchReport& report) {
  std::size_t width = 7;
  for (const BenchRow& r : report.rows) width = std::max(width, r.name.size());
  std::ostringstream out;
  out << std::left << std::setw(static_cast<int>(width)) << "circuit" << std::right
      << std::setw(7) << "qubits" << std::setw(8) << "cnots" << std::setw(8)
      << "adac" << std::setw(8) << "sabre" << std::setw(11) << "rho"
      << std::setw(11) << "adac_ms" << std::setw(11) << "sabre_ms"
      << "  status\n";
  out << std::fixed << std::setprecision(1);
  for (const BenchRow& r : report.rows) {
    out << std::left << std::setw(static_cast<int>(width)) << r.name
        << std::right << std::setw(7) << r.qubits << std::setw(8)
        << r.cnot_count << std::setw(8) << r.swaps_adac << std::setw(8)
        << r.swaps_baseline << std::setw(11) << format_rho(r.rho)
        << std::setw(11) << r.wall_ms_adac << std::setw(11)
        << r.wall_ms_baseline << "  " << (r.valid ? "ok" : "INVALID: " + r.error)
        << "\n";
  }
  out << std::left << std::setw(static_cast<int>(width)) << "total" << std::right
      << std::setw(7) << "" << std::setw(8) << "" << std::setw(8)
      << report.total_adac << std::setw(8) << report.total_baseline
      << std::setw(11) << format_rho(report.aggregate_rho) << "\n";
  return out.str();
}

std::string to_csv(const BenchReport& report) {
  std::ostringstream out;
  out << "name,qubits,cnot_count,swaps_adac,swaps_baseline,rho,wall_ms_adac,"
         "wall_ms_baseline,valid\n";
  for (const BenchRow& r : report.rows) {
    out << r.name << ',' << r.qubits << ',' << r.cnot_count << ','
        << r.swaps_adac << ',' << r.swaps_baseline << ',';
    if (r.rho) {
      out << *r.rho;
    } else {
      out << "undefined";
    }
    out << ',' << r.wall_ms_adac << ',' << r.wall_ms_baseline << ','
        << (r.valid ? "true" : "false") << '\n';
  }
  return out.str();
}

}  // namespace adac
