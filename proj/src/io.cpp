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

#include "adac/io.hpp"

#include <filesystem>
#include <fstream>
#include <sstream>
#include <stdexcept>

namespace adac {

ArchGraph arch_from_json(const nlohmann::json& j, const std::string& name) {
  if (!j.is_object() || !j.contains("n") || !j.contains("edges") ||
      !j["n"].is_number_unsigned() || !j["edges"].is_array()) {
    throw std::invalid_argument(
        "architecture JSON needs an integer \"n\" and an \"edges\" array");
  }
  std::vector<Edge> edges;
  for (const auto& e : j["edges"]) {
    if (!e.is_array() || e.size() != 2 || !e[0].is_number_unsigned() ||
        !e[1].is_number_unsigned()) {
      throw std::invalid_argument("each edge must be a pair of vertex ids");
    }
    edges.emplace_back(e[0].get<Vertex>(), e[1].get<Vertex>());
  }
  return ArchGraph(j["n"].get<std::size_t>(), std::move(edges), name);
}

nlohmann::json arch_to_json(const ArchGraph& ag) {
  nlohmann::json edges = nlohmann::json::array();
  for (auto [u, v] : ag.edges()) edges.push_back({u, v});
  return {{"n", ag.num_vertices()}, {"edges", edges}};
}

ArchGraph load_arch(const std::string& spec) {
  if (std::filesystem::is_regular_file(spec)) {
    nlohmann::json j;
    try {
      j = nlohmann::json::parse(read_text_file(spec));
    } catch (const nlohmann::json::parse_error& e) {
      throw std::invalid_argument(spec + ": " + e.what());
    }
    return arch_from_json(j, std::filesystem::path(spec).stem().string());
  }
  return ArchGraph::by_name(spec);
}

nlohmann::json placement_to_json(const Mapping& m) {
  nlohmann::json out = nlohmann::json::array();
  for (Vertex v : m.forward()) {
    if (v == kNoVertex) {
      out.push_back(nullptr);
    } else {
      out.push_back(v);
    }
  }
  return out;
}

Mapping placement_from_json(const nlohmann::json& j, std::size_t num_vertices) {
  if (!j.is_array()) {
    throw std::invalid_argument("placement must be a JSON array");
  }
  Mapping m(j.size(), num_vertices);
  for (std::size_t q = 0; q < j.size(); ++q) {
    if (j[q].is_null()) continue;
    if (!j[q].is_number_unsigned() || j[q].get<std::size_t>() >= num_vertices) {
      throw std::invalid_argument("placement entry " + std::to_string(q) +
                                  " is not a device vertex");
    }
    const auto v = j[q].get<Vertex>();
    if (m.occupied(v)) {
      throw std::invalid_argument("vertex " + std::to_string(v) +
                                  " is used twice in the placement");
    }
    m.place(static_cast<Qubit>(q), v);
  }
  return m;
}

nlohmann::json routing_report(const RoutedCircuit& rc, const std::string& circuit,
                              const std::string& arch, const AdacParams& params,
                              std::size_t cnot_count, double wall_time_ms) {
  nlohmann::json divisions = nlohmann::json::array();
  for (const DivisionSummary& d : rc.divisions) {
    divisions.push_back({{"gates", d.gates}, {"swaps", d.swaps}});
  }
  return {
      {"circuit", circuit},
      {"arch", arch},
      {"router", rc.router},
      {"params", {{"t_ini", params.t_ini}, {"t_s", params.t_s}, {"t_d", params.t_d}}},
      {"swaps_added", rc.swap_count},
      {"cnot_count", cnot_count},
      {"divisions", divisions},
      {"initial_placement", placement_to_json(rc.initial_placement)},
      {"wall_time_ms", wall_time_ms},
  };
}

std::string read_text_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw std::runtime_error("cannot open " + path);
  std::ostringstream buf;
  buf << in.rdbuf();
  return buf.str();
}

void write_text_file(const std::string& path, const std::string& text) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw std::runtime_error("cannot write " + path);
  out << text;
  if (!out) throw std::runtime_error("error while writing " + path);
}

}  // namespace adac
