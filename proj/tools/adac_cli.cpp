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

#include <CLI11.hpp>
#include <json.hpp>

#include <chrono>
#include <filesystem>
#include <iostream>
#include <stdexcept>
#include <string>

#include "adac/bench.hpp"
#include "adac/io.hpp"
#include "adac/log.hpp"
#include "adac/qasm.hpp"
#include "adac/route.hpp"
#include "adac/sabre.hpp"
#include "adac/verify.hpp"

namespace {

constexpr int kOk = 0;
constexpr int kVerifyFailed = 1;
constexpr int kInputError = 2;

// Thrown for bad user input; mapped to exit code 2.
struct InputError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

void add_params(CLI::App* cmd, adac::AdacParams& p) {
  cmd->add_option("--t-ini", p.t_ini, "Reverse-traversal rounds")
      ->check(CLI::PositiveNumber);
  cmd->add_option("--t-s", p.t_s, "SWAP threshold per division")
      ->check(CLI::PositiveNumber);
  cmd->add_option("--t-d", p.t_d, "Look-ahead depth")->check(CLI::PositiveNumber);
  cmd->add_option("--sabre-trials", p.sabre.trials, "Baseline trials")
      ->check(CLI::PositiveNumber);
}

adac::ArchGraph arch_or_throw(const std::string& spec) {
  try {
    return adac::load_arch(spec);
  } catch (const std::exception& e) {
    throw InputError(e.what());
  }
}

adac::Circuit circuit_or_throw(const std::string& path) {
  try {
    return adac::read_qasm_file(path);
  } catch (const adac::QasmError& e) {
    throw InputError(path + ": " + e.what());
  } catch (const std::exception& e) {
    throw InputError(e.what());
  }
}

std::size_t logical_cnots(const adac::Circuit& c) {
  return c.count(adac::GateKind::Cnot) + 3 * c.count(adac::GateKind::Swap);
}

struct MapOptions {
  std::string circuit;
  std::string arch;
  std::string router = "adac";
  std::string output;
  std::string report;
  std::string placement;
  bool expand_swaps = false;
  bool verify = false;
  adac::AdacParams params;
};

int run_map(const MapOptions& o) {
  const adac::ArchGraph ag = arch_or_throw(o.arch);
  const adac::Circuit lc = circuit_or_throw(o.circuit);
  if (lc.num_qubits() > ag.num_vertices()) {
    throw InputError("circuit has " + std::to_string(lc.num_qubits()) +
                     " qubits but " + o.arch + " only " +
                     std::to_string(ag.num_vertices()));
  }

  const auto t0 = std::chrono::steady_clock::now();
  const adac::RoutedCircuit rc =
      o.router == "sabre" ? adac::sabre(lc, ag, o.params.sabre, o.params.t_ini)
                          : adac::adac(lc, ag, o.params);
  const double ms = std::chrono::duration<double, std::milli>(
                        std::chrono::steady_clock::now() - t0)
                        .count();

  const std::string qasm = adac::emit_qasm(rc, o.expand_swaps);
  if (o.output.empty()) {
    std::cout << qasm;
  } else {
    adac::write_text_file(o.output, qasm);
  }
  const std::string name = std::filesystem::path(o.circuit).filename().string();
  const auto report =
      adac::routing_report(rc, name, ag.name(), o.params, logical_cnots(lc), ms);
  if (!o.report.empty()) adac::write_text_file(o.report, report.dump(2) + "\n");
  if (!o.placement.empty()) {
    adac::write_text_file(o.placement,
                          adac::placement_to_json(rc.initial_placement).dump() + "\n");
  }
  std::cerr << rc.router << ": " << rc.swap_count << " SWAPs added\n";

  if (!adac::check_executability(rc, ag)) {
    std::cerr << "error: output violates the coupling graph\n";
    return kVerifyFailed;
  }
  if (o.verify) {
    const auto eq = adac::check_equivalence_report(lc, rc, ag);
    if (!eq.ok()) {
      std::cerr << "verification failed: " << eq.message << "\n";
      return kVerifyFailed;
    }
    std::cerr << "verified" << (eq.permutation_checked ? "" : " (order only)")
              << "\n";
  }
  return kOk;
}

struct BenchOptions {
  std::string corpus;
  std::string arch;
  std::string json;
  std::string csv;
  std::size_t threads = 0;
  adac::AdacParams params;
};

int run_bench(const BenchOptions& o) {
  const adac::ArchGraph ag = arch_or_throw(o.arch);
  std::vector<adac::BenchCase> cases;
  try {
    cases = adac::load_corpus(o.corpus);
  } catch (const std::exception& e) {
    throw InputError(e.what());
  }
  if (cases.empty()) throw InputError("no .qasm files in " + o.corpus);
  const adac::BenchReport report = adac::run_suite(cases, ag, o.params, o.threads);
  std::cout << adac::to_table(report);
  if (!o.json.empty()) {
    adac::write_text_file(o.json, adac::to_json(report).dump(2) + "\n");
  }
  if (!o.csv.empty()) adac::write_text_file(o.csv, adac::to_csv(report));
  return report.all_valid() ? kOk : kVerifyFailed;
}

struct GenOptions {
  std::size_t qubits = 0;
  std::size_t lq = 0;
  std::size_t lg = 0;
  std::size_t count = 1;
  std::uint64_t seed = 0;
  std::string dir;
};

int run_gen(const GenOptions& o) {
  if (o.lq < 2 || o.lq > o.qubits || o.lg == 0) {
    throw InputError("need 2 <= lq <= qubits and lg >= 1");
  }
  std::filesystem::create_directories(o.dir);
  for (const auto& c : adac::generate_corpus(o.qubits, o.lq, o.lg, o.count, o.seed)) {
    const auto path = std::filesystem::path(o.dir) / (c.name + ".qasm");
    adac::write_text_file(path.string(), adac::emit_qasm(c.circuit));
  }
  std::cerr << "wrote " << o.count << " circuits to " << o.dir << "\n";
  return kOk;
}

struct VerifyOptions {
  std::string logical;
  std::string physical;
  std::string arch;
  std::string placement;
};

int run_verify(const VerifyOptions& o) {
  const adac::ArchGraph ag = arch_or_throw(o.arch);
  const adac::Circuit lc = circuit_or_throw(o.logical);
  const adac::Circuit pc = circuit_or_throw(o.physical);
  if (pc.num_qubits() > ag.num_vertices()) {
    throw InputError("physical circuit is wider than " + o.arch);
  }
  adac::Mapping initial;
  try {
    auto j = nlohmann::json::parse(adac::read_text_file(o.placement));
    // A map report carries the placement under "initial_placement".
    if (j.is_object()) j = j.at("initial_placement");
    initial = adac::placement_from_json(j, ag.num_vertices());
  } catch (const std::exception& e) {
    throw InputError(o.placement + ": " + e.what());
  }
  if (initial.num_qubits() != lc.num_qubits()) {
    throw InputError("placement covers " + std::to_string(initial.num_qubits()) +
                     " qubits, circuit has " + std::to_string(lc.num_qubits()));
  }
  adac::Circuit widened(ag.num_vertices());
  for (const adac::Gate& g : pc) widened.add(g);

  if (!adac::check_executability(widened, ag)) {
    std::cout << "FAIL: a two-qubit gate is not on a coupling edge\n";
    return kVerifyFailed;
  }
  const auto eq = adac::check_equivalence_report(lc, widened, initial, ag);
  if (!eq.ok()) {
    std::cout << "FAIL: " << eq.message << "\n";
    return kVerifyFailed;
  }
  std::cout << "OK" << (eq.permutation_checked ? "" : " (" + eq.message + ")")
            << "\n";
  return kOk;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Qubit mapping by adaptive circuit division"};
  app.require_subcommand(1);
  app.fallthrough();
  bool quiet = false;
  app.add_flag("-q,--quiet", quiet, "Suppress warnings");

  MapOptions map;
  auto* map_cmd = app.add_subcommand("map", "Route a QASM circuit onto a device");
  map_cmd->add_option("circuit", map.circuit, "Logical circuit (.qasm)")->required();
  map_cmd->add_option("--arch", map.arch, "Built-in device name or JSON file")
      ->required();
  map_cmd->add_option("--router", map.router, "Router")
      ->check(CLI::IsMember({"adac", "sabre"}));
  map_cmd->add_option("-o,--output", map.output, "Physical circuit (default stdout)");
  map_cmd->add_option("--report", map.report, "Report JSON");
  map_cmd->add_option("--placement-out", map.placement, "Initial placement JSON");
  map_cmd->add_flag("--expand-swaps", map.expand_swaps, "Write SWAPs as three cx");
  map_cmd->add_flag("--verify", map.verify, "Check equivalence of the result");
  add_params(map_cmd, map.params);

  BenchOptions bench;
  auto* bench_cmd = app.add_subcommand("bench", "Compare ADAC with the baseline");
  bench_cmd->add_option("corpus", bench.corpus, "Directory of .qasm files")
      ->required();
  bench_cmd->add_option("--arch", bench.arch, "Built-in device name or JSON file")
      ->required();
  bench_cmd->add_option("--json", bench.json, "Report JSON");
  bench_cmd->add_option("--csv", bench.csv, "Report CSV");
  bench_cmd->add_option("--threads", bench.threads, "Worker threads (0: all cores)");
  add_params(bench_cmd, bench.params);

  GenOptions gen;
  auto* gen_cmd = app.add_subcommand("gen", "Generate pseudo-realistic circuits");
  gen_cmd->add_option("--qubits", gen.qubits, "Qubits")->required();
  gen_cmd->add_option("--lq", gen.lq, "Local qubit number")->required();
  gen_cmd->add_option("--lg", gen.lg, "Local gate number")->required();
  gen_cmd->add_option("--count", gen.count, "Circuits")->check(CLI::PositiveNumber);
  gen_cmd->add_option("--seed", gen.seed, "Seed");
  gen_cmd->add_option("-o,--output", gen.dir, "Output directory")->required();

  VerifyOptions verify;
  auto* verify_cmd =
      app.add_subcommand("verify", "Check a physical circuit against a logical one");
  verify_cmd->add_option("logical", verify.logical, "Logical circuit")->required();
  verify_cmd->add_option("physical", verify.physical, "Physical circuit")->required();
  verify_cmd->add_option("--arch", verify.arch, "Built-in device name or JSON file")
      ->required();
  verify_cmd->add_option("--placement", verify.placement,
                         "Initial placement JSON (array or map report)")
      ->required();

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int rc = app.exit(e);
    return rc == 0 ? kOk : kInputError;
  }
  if (quiet) adac::set_log_level(adac::LogLevel::Quiet);

  try {
    if (*map_cmd) return run_map(map);
    if (*bench_cmd) return run_bench(bench);
    if (*gen_cmd) return run_gen(gen);
    return run_verify(verify);
  } catch (const InputError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kInputError;
  } catch (const std::invalid_argument& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kInputError;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kVerifyFailed;
  }
}
