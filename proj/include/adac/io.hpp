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

#include <string>

#include <json.hpp>

#include "adac/arch.hpp"
#include "adac/mapping.hpp"
#include "adac/route.hpp"

namespace adac {

/// {"n": int, "edges": [[u, v], ...]}. Throws std::invalid_argument on a
/// malformed document.
ArchGraph arch_from_json(const nlohmann::json& j, const std::string& name = "custom");
nlohmann::json arch_to_json(const ArchGraph& ag);

/// A built-in name, or a path to an architecture JSON file.
ArchGraph load_arch(const std::string& spec);

/// Array indexed by logical qubit.
nlohmann::json placement_to_json(const Mapping& m);
Mapping placement_from_json(const nlohmann::json& j, std::size_t num_vertices);

/// Report of one `map` run. `wall_time_ms` is the only non-deterministic
/// field.
nlohmann::json routing_report(const RoutedCircuit& rc, const std::string& circuit,
                              const std::string& arch, const AdacParams& params,
                              std::size_t cnot_count, double wall_time_ms);

std::string read_text_file(const std::string& path);
void write_text_file(const std::string& path, const std::string& text);

}  // namespace adac
