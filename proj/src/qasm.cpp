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

#include "adac/qasm.hpp"

#include <cctype>
#include <fstream>
#include <map>
#include <optional>
#include <sstream>
#include <vector>

#include "adac/log.hpp"

namespace adac {

QasmError::QasmError(const std::string& what, std::size_t line,
                     std::size_t column)
    : std::runtime_error("line " + std::to_string(line) + ", column " +
                         std::to_string(column) + ": " + what),
      line_(line),
      column_(column) {}

namespace {

struct Statement {
  std::string text;
  std::size_t line;
  std::size_t column;
};

std::string trim(std::string_view s) {
  std::size_t a = 0;
  std::size_t b = s.size();
  while (a < b && std::isspace(static_cast<unsigned char>(s[a]))) ++a;
  while (b > a && std::isspace(static_cast<unsigned char>(s[b - 1]))) --b;
  return std::string(s.substr(a, b - a));
}

std::string strip_spaces(std::string_view s) {
  std::string out;
  for (char ch : s) {
    if (!std::isspace(static_cast<unsigned char>(ch))) out.push_back(ch);
  }
  return out;
}

// Splits into ';'-terminated statements (and '{...}' gate bodies), dropping
// comments.
std::vector<Statement> split(std::string_view text) {
  std::vector<Statement> out;
  std::string cur;
  std::size_t line = 1;
  std::size_t col = 1;
  std::size_t start_line = 1;
  std::size_t start_col = 1;
  int depth = 0;
  for (std::size_t i = 0; i < text.size(); ++i) {
    const char ch = text[i];
    if (ch == '/' && i + 1 < text.size() && text[i + 1] == '/') {
      while (i < text.size() && text[i] != '\n') ++i;
      ++line;
      col = 1;
      if (!cur.empty()) cur.push_back(' ');
      continue;
    }
    if (trim(cur).empty() && !std::isspace(static_cast<unsigned char>(ch))) {
      start_line = line;
      start_col = col;
    }
    if (ch == '{') ++depth;
    cur.push_back(ch);
    if (ch == '}') {
      --depth;
      if (depth == 0) {
        out.push_back({trim(cur), start_line, start_col});
        cur.clear();
      }
    } else if (ch == ';' && depth == 0) {
      cur.pop_back();
      out.push_back({trim(cur), start_line, start_col});
      cur.clear();
    }
    if (ch == '\n') {
      ++line;
      col = 1;
    } else {
      ++col;
    }
  }
  if (!trim(cur).empty()) {
    throw QasmError("statement is missing its terminating ';'", start_line,
                    start_col);
  }
  return out;
}

class Parser {
 public:
  Circuit run(std::string_view text) {
    for (const Statement& st : split(text)) statement(st);
    for (const auto& [what, seen] : skipped_) {
      log_warning("ignored " + std::to_string(seen.count) + " " + what +
                  " statement(s), first on line " + std::to_string(seen.line));
    }
    if (!reg_) return Circuit(0);
    return std::move(circuit_);
  }

 private:
  [[noreturn]] void error(const Statement& st, const std::string& what) const {
    throw QasmError(what, st.line, st.column);
  }

  void statement(const Statement& st) {
    const std::string& s = st.text;
    if (s.empty()) return;
    std::size_t i = 0;
    while (i < s.size() && (std::isalnum(static_cast<unsigned char>(s[i])) ||
                            s[i] == '_')) {
      ++i;
    }
    const std::string word = s.substr(0, i);
    if (word.empty()) error(st, "expected a statement, found '" + s + "'");

    if (word == "OPENQASM") {
      if (strip_spaces(s.substr(i)) != "2.0") {
        error(st, "only OPENQASM 2.0 is supported");
      }
      return;
    }
    if (word == "include") return;
    if (word == "gate" || word == "opaque") {
      skip(st, "gate definition");
      return;
    }
    if (word == "creg") return;
    if (word == "barrier" || word == "measure") {
      skip(st, word);
      return;
    }
    if (word == "if") error(st, "classically controlled gates are not supported");
    if (word == "qreg") {
      qreg(st, s.substr(i));
      return;
    }
    gate(st, word, s.substr(i));
  }

  void skip(const Statement& st, const std::string& what) {
    auto [it, fresh] = skipped_.try_emplace(what, Skipped{0, st.line});
    ++it->second.count;
  }

  void qreg(const Statement& st, const std::string& rest) {
    if (reg_) error(st, "only one qreg is supported");
    const std::string body = strip_spaces(rest);
    const auto open = body.find('[');
    const auto close = body.find(']');
    if (open == std::string::npos || close != body.size() - 1 || open == 0) {
      error(st, "malformed qreg declaration");
    }
    reg_ = body.substr(0, open);
    const std::size_t n = number(st, body.substr(open + 1, close - open - 1));
    circuit_ = Circuit(n);
  }

  std::size_t number(const Statement& st, const std::string& s) const {
    if (s.empty() || s.size() > 9) error(st, "bad integer '" + s + "'");
    for (char ch : s) {
      if (!std::isdigit(static_cast<unsigned char>(ch))) {
        error(st, "bad integer '" + s + "'");
      }
    }
    return std::stoul(s);
  }

  // Qubit index, or nullopt for the whole register.
  std::optional<Qubit> operand(const Statement& st, const std::string& arg) {
    if (!reg_) error(st, "gate used before any qreg declaration");
    const auto open = arg.find('[');
    const std::string name = arg.substr(0, open);
    if (name != *reg_) error(st, "unknown register '" + name + "'");
    if (open == std::string::npos) return std::nullopt;
    if (arg.back() != ']') error(st, "malformed operand '" + arg + "'");
    const std::size_t q = number(st, arg.substr(open + 1, arg.size() - open - 2));
    if (q >= circuit_.num_qubits()) {
      error(st, "qubit index " + std::to_string(q) + " out of range");
    }
    return static_cast<Qubit>(q);
  }

  void gate(const Statement& st, const std::string& name,
            const std::string& rest_in) {
    std::string rest = trim(rest_in);
    std::string params;
    if (!rest.empty() && rest.front() == '(') {
      const auto close = rest.find(')');
      if (close == std::string::npos) error(st, "unbalanced parentheses");
      params = strip_spaces(rest.substr(0, close + 1));
      rest = trim(rest.substr(close + 1));
    }
    const std::string args = strip_spaces(rest);
    if (args.empty()) error(st, "gate '" + name + "' has no operands");
    std::vector<std::string> parts;
    std::size_t from = 0;
    for (;;) {
      const auto comma = args.find(',', from);
      parts.push_back(args.substr(from, comma - from));
      if (comma == std::string::npos) break;
      from = comma + 1;
    }

    if (parts.size() == 1) {
      const auto q = operand(st, parts[0]);
      const std::string label = name + params;
      if (q) {
        circuit_.add_single(label, *q);
      } else {
        for (Qubit r = 0; r < circuit_.num_qubits(); ++r) {
          circuit_.add_single(label, r);
        }
      }
      return;
    }
    const bool is_cx = name == "cx" || name == "CX";
    if (parts.size() != 2 || (!is_cx && name != "swap") || !params.empty()) {
      error(st, "unsupported gate '" + name + "' on " +
                    std::to_string(parts.size()) + " qubits");
    }
    const auto a = operand(st, parts[0]);
    const auto b = operand(st, parts[1]);
    if (!a || !b) error(st, "register-wide two-qubit gates are not supported");
    if (*a == *b) error(st, "two-qubit gate on a single qubit");
    if (is_cx) {
      circuit_.add_cnot(*a, *b);
    } else {
      circuit_.add_swap(*a, *b);
    }
  }

  struct Skipped {
    std::size_t count;
    std::size_t line;
  };

  std::optional<std::string> reg_;
  Circuit circuit_;
  std::map<std::string, Skipped> skipped_;
};

}  // namespace

Circuit parse_qasm(std::string_view text) { return Parser().run(text); }

Circuit read_qasm_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw std::runtime_error("cannot open " + path);
  std::ostringstream buf;
  buf << in.rdbuf();
  return parse_qasm(buf.str());
}

std::string emit_qasm(const Circuit& c, bool expand_swaps) {
  std::ostringstream out;
  out << "OPENQASM 2.0;\ninclude \"qelib1.inc\";\n";
  if (c.num_qubits() > 0) out << "qreg q[" << c.num_qubits() << "];\n";
  for (const Gate& g : c) {
    switch (g.kind) {
      case GateKind::Single:
        out << g.label << " q[" << g.q0 << "];\n";
        break;
      case GateKind::Cnot:
        out << "cx q[" << g.q0 << "],q[" << g.q1 << "];\n";
        break;
      case GateKind::Swap:
        if (expand_swaps) {
          out << "cx q[" << g.q0 << "],q[" << g.q1 << "];\n"
              << "cx q[" << g.q1 << "],q[" << g.q0 << "];\n"
              << "cx q[" << g.q0 << "],q[" << g.q1 << "];\n";
        } else {
          out << "swap q[" << g.q0 << "],q[" << g.q1 << "];\n";
        }
        break;
    }
  }
  return out.str();
}

}  // namespace adac
