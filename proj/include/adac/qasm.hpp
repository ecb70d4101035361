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
#include <stdexcept>
#include <string>
#include <string_view>

#include "adac/circuit.hpp"
#include "adac/routed.hpp"

namespace adac {

/// Malformed or unsupported QASM input, with a 1-based source position.
class QasmError : public std::runtime_error {
 public:
  QasmError(const std::string& what, std::size_t line, std::size_t column);

  [[nodiscard]] std::size_t line() const { return line_; }
  [[nodiscard]] std::size_t column() const { return column_; }

 private:
  std::size_t line_;
  std::size_t column_;
};

/// Reads the OpenQASM 2.0 subset used for mapping: one qreg, `cx`, `swap`,
/// and any other one-qubit gate as an opaque label (gate name plus
/// parameter text). `barrier`, `measure`, `creg`, includes and gate
/// definitions are skipped with a warning. A one-qubit gate applied to the
/// whole register expands to one gate per qubit.
Circuit parse_qasm(std::string_view text);
Circuit read_qasm_file(const std::string& path);

/// Writes `c` over register q; with `expand_swaps` each swap becomes three
/// cx gates.
std::string emit_qasm(const Circuit& c, bool expand_swaps = false);
inline std::string emit_qasm(const RoutedCircuit& rc, bool expand_swaps = false) {
  return emit_qasm(rc.physical, expand_swaps);
}

}  // namespace adac
