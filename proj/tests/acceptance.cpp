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

// Acceptance checks: prints one PASS/FAIL line per criterion. The exit code
// is non-zero when a check could not run, or with --strict when any criterion
// fails.

#include <json.hpp>

#include <algorithm>
#include <atomic>
#include <chrono>
#include <cstdlib>
#include <filesystem>
#include <iomanip>
#include <iostream>
#include <sstream>
#include <string>
#include <thread>
#include <vector>

#include "adac/bench.hpp"
#include "adac/io.hpp"
#include "adac/log.hpp"
#include "adac/qasm.hpp"
#include "adac/rng.hpp"
#include "adac/route.hpp"
#include "adac/sabre.hpp"
#include "adac/verify.hpp"

using namespace adac;

namespace {

using Clock = std::chrono::steady_clock;

double seconds_since(Clock::time_point t0) {
  return std::chrono::duration<double>(Clock::now() - t0).count();
}

struct Outcome {
  bool pass = false;
  std::string detail;
};

std::vector<std::pair<int, Outcome>> results;

void report(int id, const Outcome& o) {
  results.emplace_back(id, o);
  std::cout << "criterion " << id << ": " << (o.pass ? "PASS" : "FAIL") << "  "
            << o.detail << std::endl;
}

std::string fmt(double x, int digits = 2) {
  std::ostringstream out;
  out << std::fixed << std::setprecision(digits) << x;
  return out.str();
}

// Runs f(i) for i in [0, n) on all cores and returns the results in order.
template <class F>
auto parallel_map(std::size_t n, F f) {
  using R = decltype(f(std::size_t{0}));
  std::vector<R> out(n);
  std::atomic<std::size_t> next{0};
  const std::size_t workers =
      std::max<std::size_t>(1, std::min<std::size_t>(n, std::thread::hardware_concurrency()));
  std::vector<std::thread> pool;
  for (std::size_t w = 0; w < workers; ++w) {
    pool.emplace_back([&] {
      for (std::size_t i = next++; i < n; i = next++) out[i] = f(i);
    });
  }
  for (auto& t : pool) t.join();
  return out;
}

Outcome triangle_on_line() {
  const auto t0 = Clock::now();
  Circuit c(3);
  c.add_cnot(0, 1);
  c.add_cnot(1, 2);
  c.add_cnot(0, 2);
  const ArchGraph l3 = ArchGraph::line(3);
  const RoutedCircuit rc = adac::adac(c, l3);
  const bool eq = check_equivalence(c, rc, l3);
  const double s = seconds_since(t0);
  return {rc.swap_count == 1 && eq && s < 1.0,
          std::to_string(rc.swap_count) + " SWAP, equivalent=" +
              (eq ? "yes" : "no") + ", " + fmt(s * 1000, 1) + " ms"};
}

Outcome zero_swap_circuits() {
  const auto t0 = Clock::now();
  const ArchGraph tokyo = ArchGraph::tokyo();
  const std::string dir = ADAC_TEST_DATA_DIR;
  std::vector<std::string> names{"ising_model_10", "ising_model_13"};
  for (const char* optional : {"4mod5-v1_22", "mod5mils_65"}) {
    if (std::filesystem::exists(dir + "/" + optional + ".qasm")) {
      names.emplace_back(optional);
    }
  }
  bool ok = true;
  std::string detail;
  for (const std::string& n : names) {
    const Circuit c = read_qasm_file(dir + "/" + n + ".qasm");
    const RoutedCircuit rc = adac::adac(c, tokyo);
    const bool eq = check_equivalence(c, rc, tokyo);
    ok = ok && rc.swap_count == 0 && eq;
    detail += n + " (" + std::to_string(c.count_two_qubit()) + " CNOTs): " +
              std::to_string(rc.swap_count) + " SWAPs" + (eq ? "" : " NOT EQUIVALENT") +
              "; ";
  }
  if (names.size() == 2) detail += "4mod5-v1_22 and mod5mils_65 not supplied; ";
  const double s = seconds_since(t0);
  ok = ok && s < 10.0;
  return {ok, detail + fmt(s, 2) + " s"};
}

Outcome swap_search_oracle() {
  const auto t0 = Clock::now();
  const std::size_t instances = 600;
  const std::size_t t_s = 6;
  struct Row {
    bool mismatch = false;
    bool solvable = false;
    bool budget = false;
  };
  const auto rows = parallel_map(instances, [&](std::size_t i) {
    Rng rng(Rng::stream_seed(0xacce55, i));
    const std::size_t v = 3 + rng.below(6);  // 3..8 vertices
    std::vector<Edge> edges;
    for (Vertex w = 1; w < v; ++w) {
      edges.emplace_back(static_cast<Vertex>(rng.below(w)), w);
    }
    for (std::size_t k = rng.below(v); k > 0; --k) {
      const auto a = static_cast<Vertex>(rng.below(v));
      const auto b = static_cast<Vertex>(rng.below(v));
      const Edge e{std::min(a, b), std::max(a, b)};
      if (a != b && std::find(edges.begin(), edges.end(), e) == edges.end()) {
        edges.push_back(e);
      }
    }
    const ArchGraph ag(v, edges);
    const std::size_t n = 2 + rng.below(v - 1);
    std::vector<Vertex> verts(v);
    for (Vertex w = 0; w < v; ++w) verts[w] = w;
    for (std::size_t k = v; k > 1; --k) std::swap(verts[k - 1], verts[rng.below(k)]);
    verts.resize(n);
    const Mapping m = Mapping::from_vector(verts, v);
    Circuit c(n);
    for (std::size_t k = 1 + rng.below(3); k > 0; --k) {
      const auto a = static_cast<Qubit>(rng.below(n));
      auto b = static_cast<Qubit>(rng.below(n - 1));
      if (b >= a) ++b;
      c.add_cnot(a, b);
    }
    const SwapSearchResult got = search_swaps(c.gates(), m, ag, t_s);
    const auto want = exact_mapping_to_graph_distance(m, interaction_graph(c), ag, t_s);
    Row r;
    r.solvable = want.has_value();
    r.budget = got.budget_exhausted;
    if (want) {
      r.mismatch = r.budget ? false : (!got.swaps || got.swaps->size() != *want);
      if (got.swaps && cost(*got.swaps, c.gates(), m, ag) != 0) r.mismatch = true;
    } else {
      r.mismatch = got.swaps.has_value();
    }
    return r;
  });
  std::size_t mismatches = 0;
  std::size_t solvable = 0;
  std::size_t budget = 0;
  for (const Row& r : rows) {
    mismatches += r.mismatch;
    solvable += r.solvable;
    budget += r.budget;
  }
  const double s = seconds_since(t0);
  const bool ok = mismatches == 0 && budget * 100 < instances && s < 60.0;
  return {ok, std::to_string(instances) + " instances, " + std::to_string(solvable) +
                  " within t_s, " + std::to_string(mismatches) + " mismatches, " +
                  std::to_string(budget) + " budget trips, " + fmt(s, 2) + " s"};
}

struct SweepRow {
  bool adac_ok = false;
  bool sabre_ok = false;
  std::string division_error;
  std::size_t max_division_swaps = 0;
  std::size_t fallbacks = 0;
  std::string error;
};

std::vector<SweepRow> sweep_rows;
double sweep_seconds = 0;

Outcome semantic_sweep() {
  const auto t0 = Clock::now();
  const ArchGraph ag = ArchGraph::grid(4, 5);
  const std::size_t count = 200;
  sweep_rows = parallel_map(count, [&](std::size_t i) {
    Rng rng(Rng::stream_seed(0x5eed5, i));
    GenSpec spec;
    spec.num_qubits = 8 + rng.below(9);
    spec.l_q = 2 + rng.below(4);
    spec.l_g = 2 + rng.below(9);
    spec.seed = rng.next();
    const Circuit c = generate_pseudo_realistic(spec).circuit;
    SweepRow row;
    try {
      const RoutedCircuit ours = adac::adac(c, ag);
      const EquivalenceReport a = check_equivalence_report(c, ours, ag);
      row.adac_ok = a.ok() && a.permutation_checked && check_executability(ours, ag);
      const RoutedCircuit base = sabre(c, ag);
      const EquivalenceReport b = check_equivalence_report(c, base, ag);
      row.sabre_ok = b.ok() && b.permutation_checked && check_executability(base, ag);
      if (!ours.initial_division) {
        row.division_error = "missing initial division";
      } else if (auto err = check_division(c, ag, *ours.initial_division)) {
        row.division_error = *err;
      }
      for (const DivisionSummary& d : ours.divisions) {
        row.max_division_swaps = std::max(row.max_division_swaps, d.swaps);
      }
      row.fallbacks = ours.fallbacks;
    } catch (const std::exception& e) {
      row.error = e.what();
    }
    return row;
  });
  sweep_seconds = seconds_since(t0);
  std::size_t adac_ok = 0;
  std::size_t sabre_ok = 0;
  for (const SweepRow& r : sweep_rows) {
    adac_ok += r.adac_ok;
    sabre_ok += r.sabre_ok;
    if (!r.error.empty()) std::cout << "  error: " << r.error << "\n";
  }
  const bool ok = adac_ok == count && sabre_ok == count && sweep_seconds < 300;
  return {ok, "adac " + std::to_string(adac_ok) + "/" + std::to_string(count) +
                  ", sabre " + std::to_string(sabre_ok) + "/" + std::to_string(count) +
                  " equivalent on grid(4,5), " + fmt(sweep_seconds, 1) + " s"};
}

Outcome directional_improvement() {
  const auto t0 = Clock::now();
  const std::vector<std::pair<std::size_t, std::size_t>> grids{{4, 5}, {5, 5}, {6, 6}};
  const std::size_t per_grid = 50;
  const std::size_t l_g = 10;
  bool ok = true;
  std::string detail;
  std::size_t all_ours = 0;
  std::size_t all_base = 0;
  for (const auto& [r, c] : grids) {
    const ArchGraph ag = ArchGraph::grid(r, c);
    const std::size_t n = r * c;
    std::vector<BenchCase> cases;
    for (std::size_t i = 0; i < per_grid; ++i) {
      const std::size_t l_q = 3 + i % 3;
      GenSpec spec{n, l_q, l_g, Rng::stream_seed(0xd1ec7 + n, i)};
      std::ostringstream name;
      name << "pr_n" << n << "_lq" << l_q << "_lg" << l_g << "_" << std::setw(3)
           << std::setfill('0') << i;
      cases.push_back({name.str(), generate_pseudo_realistic(spec).circuit, ""});
    }
    const BenchReport rep = run_suite(cases, ag, {});
    std::cout << "--- " << ag.name() << " (" << per_grid << " circuits, l_q in {3,4,5}, l_g = "
              << l_g << ", vs. in-repo baseline) ---\n"
              << to_table(rep);
    const bool grid_ok = rep.all_valid() && rep.aggregate_rho && *rep.aggregate_rho >= 0;
    ok = ok && grid_ok;
    all_ours += rep.total_adac;
    all_base += rep.total_baseline;
    detail += ag.name() + " rho=" +
              (rep.aggregate_rho ? fmt(*rep.aggregate_rho * 100) + "%" : "undefined") +
              (rep.all_valid() ? "" : " (invalid rows)") + "; ";
  }
  const auto overall = improvement(all_ours, all_base);
  detail += "overall " + (overall ? fmt(*overall * 100) + "%" : "undefined") +
            "; ";
  const double s = seconds_since(t0);
  ok = ok && s < 600;
  return {ok, detail + fmt(s, 1) + " s"};
}

Outcome metric() {
  const auto rho = improvement(4993, 5538);
  const bool ok = rho && std::abs(*rho - 0.0984) <= 1e-4;
  return {ok, "improvement(4993, 5538) = " + (rho ? fmt(*rho, 6) : "undefined")};
}

Outcome division_validity() {
  std::size_t bad_division = 0;
  std::size_t over_budget = 0;
  std::size_t with_fallback = 0;
  std::size_t worst = 0;
  for (const SweepRow& r : sweep_rows) {
    bad_division += !r.division_error.empty() || !r.error.empty();
    const std::size_t limit = r.fallbacks > 0 ? 24 : 12;
    over_budget += r.max_division_swaps > limit;
    with_fallback += r.fallbacks > 0;
    worst = std::max(worst, r.max_division_swaps);
    if (!r.division_error.empty()) std::cout << "  division: " << r.division_error << "\n";
  }
  const bool ok = !sweep_rows.empty() && bad_division == 0 && over_budget == 0;
  return {ok, std::to_string(sweep_rows.size()) + " divisions checked, " +
                  std::to_string(bad_division) + " invalid, longest SWAP sequence " +
                  std::to_string(worst) + ", " + std::to_string(over_budget) +
                  " over threshold, fallbacks in " + std::to_string(with_fallback) +
                  " circuits"};
}


Outcome determinism() {
  namespace fs = std::filesystem;
  const fs::path dir = fs::temp_directory_path() / "adac_acceptance_determinism";
  fs::remove_all(dir);
  fs::create_directories(dir);
  const std::string cli = ADAC_CLI_PATH;
  const std::string circuit = dir.string() + "/in.qasm";
  GenSpec spec{16, 4, 8, 2024};
  write_text_file(circuit, emit_qasm(generate_pseudo_realistic(spec).circuit));
  std::vector<std::string> dumps;
  for (int run = 0; run < 2; ++run) {
    const std::string out = dir.string() + "/r" + std::to_string(run);
    const std::string cmd = "\"" + cli + "\" -q map \"" + circuit +
                            "\" --arch grid4x5 -o \"" + out + ".qasm\" --report \"" +
                            out + ".json\" 2>\"" + out + ".log\"";
    if (std::system(cmd.c_str()) != 0) return {false, "map exited with an error"};
    auto j = nlohmann::json::parse(read_text_file(out + ".json"));
    j.erase("wall_time_ms");
    dumps.push_back(j.dump());
  }
  const bool same = dumps[0] == dumps[1];
  fs::remove_all(dir);
  return {same, same ? "two map runs produced identical reports"
                     : "reports differ between runs"};
}

}  // namespace

int main(int argc, char** argv) {
  const bool strict = argc > 1 && std::string(argv[1]) == "--strict";
  set_log_level(LogLevel::Quiet);
  report(1, triangle_on_line());
  report(2, zero_swap_circuits());
  report(3, swap_search_oracle());
  report(4, semantic_sweep());
  report(5, directional_improvement());
  report(6, metric());
  report(7, division_validity());
  report(8, determinism());

  std::cout << "\nsummary\n";
  int failed = 0;
  std::sort(results.begin(), results.end(),
            [](const auto& a, const auto& b) { return a.first < b.first; });
  for (const auto& [id, o] : results) {
    std::cout << "criterion " << id << ": " << (o.pass ? "PASS" : "FAIL") << "\n";
    failed += !o.pass;
  }
  std::cout << failed << " of " << results.size() << " criteria failed\n";
  return strict && failed > 0 ? 1 : 0;
}
