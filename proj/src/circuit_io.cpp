// Copyright 2026 The qroute Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include "qroute/circuit_io.hpp"

#include <charconv>
#include <cstdlib>
#include <fstream>
#include <optional>
#include <sstream>
#include <string_view>
#include <vector>

#include "qroute/errors.hpp"

namespace qroute {
namespace {

struct Statement {
  std::size_t line = 0;
  std::vector<std::string> tokens;
};

// Next non-empty line with the comment stripped, tokenized on whitespace.
std::optional<Statement> next_statement(std::istream &in, std::size_t &line_no) {
  std::string line;
  while (std::getline(in, line)) {
    ++line_no;
    if (const auto hash = line.find('#'); hash != std::string::npos) {
      line.resize(hash);
    }
    std::istringstream ss(line);
    Statement st{line_no, {}};
    for (std::string tok; ss >> tok;) {
      st.tokens.push_back(std::move(tok));
    }
    if (!st.tokens.empty()) {
      return st;
    }
  }
  return std::nullopt;
}

long long to_integer(const Statement &st, std::size_t i) {
  const std::string &tok = st.tokens[i];
  long long value = 0;
  const char *first = tok.data();
  const char *last = tok.data() + tok.size();
  if (first != last && *first == '+') {
    ++first;
  }
  const auto [ptr, ec] = std::from_chars(first, last, value);
  if (ec != std::errc{} || ptr != last) {
    throw ParseError(st.line, "expected an integer, got '" + tok + "'");
  }
  return value;
}

Wire to_wire(const Statement &st, std::size_t i, std::size_t count) {
  const long long v = to_integer(st, i);
  if (v < 0 || static_cast<std::size_t>(v) >= count) {
    throw ParseError(st.line, "wire " + st.tokens[i] + " out of range [0, " +
                                  std::to_string(count) + ")");
  }
  return static_cast<Wire>(v);
}

void expect_arity(const Statement &st, std::size_t operands) {
  if (st.tokens.size() != operands + 1) {
    throw ParseError(st.line, "'" + st.tokens[0] + "' takes " +
                                  std::to_string(operands) + " operand(s), got " +
                                  std::to_string(st.tokens.size() - 1));
  }
}

int to_step(const Statement &st, std::size_t i, int d) {
  const long long v = to_integer(st, i);
  if (v == 0 || std::llabs(v) >= d) {
    throw ParseError(st.line, "increment " + st.tokens[i] +
                                  " must satisfy 1 <= |a| < " + std::to_string(d));
  }
  return static_cast<int>(v);
}

Gate parse_gate(const Statement &st, const WireSpec &spec) {
  const std::string &op = st.tokens[0];
  const int d = spec.base_dim();
  const std::size_t n = spec.count();
  const auto pair = [&] {
    return std::pair{to_wire(st, 1, n), to_wire(st, 2, n)};
  };

  if (op == "cx") {
    expect_arity(st, 3);
    const auto [c, t] = pair();
    return gates::controlled_add(c, t, d, to_step(st, 3, d));
  }
  if (op == "cxt") {
    expect_arity(st, 2);
    const auto [c, t] = pair();
    return Gate::negated_sum(c, t, d);
  }
  if (op == "x") {
    expect_arity(st, 2);
    return Gate::increment_by(to_wire(st, 1, n), to_step(st, 2, d), d);
  }
  if (op == "block") {
    if (st.tokens.size() < 2) {
      throw ParseError(st.line, "'block' needs at least one wire");
    }
    std::vector<Wire> wires;
    for (std::size_t i = 1; i < st.tokens.size(); ++i) {
      wires.push_back(to_wire(st, i, n));
    }
    return Gate::block(std::move(wires));
  }
  if (op == "cdx" || op == "cdx-") {
    expect_arity(st, 2);
    const auto [c, t] = pair();
    const Gate g = gates::promote(c, t, d);
    return op == "cdx" ? g : g.inverse();
  }
  if (op == "cdxc" || op == "cdxc-") {
    expect_arity(st, 2);
    const auto [c, t] = pair();
    const Gate g = gates::relay(c, t, d);
    return op == "cdxc" ? g : g.inverse();
  }
  if (op == "caxc") {
    expect_arity(st, 3);
    const auto [c, t] = pair();
    return gates::deliver(c, t, d, to_step(st, 3, d));
  }
  throw ParseError(st.line, "unknown opcode '" + op + "'");
}

std::ifstream open(const std::filesystem::path &path) {
  std::ifstream in(path);
  if (!in) {
    throw Error("cannot open " + path.string());
  }
  return in;
}

} // namespace

Circuit parse_circuit(std::istream &in) {
  std::size_t line_no = 0;
  std::optional<int> radix;
  std::optional<std::size_t> wires;
  std::optional<Circuit> circuit;

  while (auto st = next_statement(in, line_no)) {
    const std::string &op = st->tokens[0];
    if (op == "radix" || op == "wires") {
      if (circuit) {
        throw ParseError(st->line, "'" + op + "' after the first gate");
      }
      expect_arity(*st, 1);
      const long long v = to_integer(*st, 1);
      if (op == "radix") {
        if (radix) {
          throw ParseError(st->line, "duplicate 'radix'");
        }
        if (v < 2 || v > 1000) {
          throw ParseError(st->line, "radix must be between 2 and 1000");
        }
        radix = static_cast<int>(v);
      } else {
        if (wires) {
          throw ParseError(st->line, "duplicate 'wires'");
        }
        if (v < 1) {
          throw ParseError(st->line, "wire count must be at least 1");
        }
        wires = static_cast<std::size_t>(v);
      }
      continue;
    }
    if (!circuit) {
      if (!radix || !wires) {
        throw ParseError(st->line, "gate before the 'radix' and 'wires' header");
      }
      circuit.emplace(*radix, *wires);
    }
    Gate gate = parse_gate(*st, circuit->spec());
    try {
      circuit->append(std::move(gate));
    } catch (const ValidationError &e) {
      throw ParseError(st->line, e.what());
    }
  }

  if (!circuit) {
    if (!radix || !wires) {
      throw ParseError(line_no, "missing 'radix' or 'wires' header");
    }
    circuit.emplace(*radix, *wires);
  }
  return *std::move(circuit);
}

Circuit parse_circuit(const std::string &text) {
  std::istringstream in(text);
  return parse_circuit(in);
}

void print_circuit(std::ostream &out, const Circuit &circuit) {
  const int d = circuit.spec().base_dim();
  out << "radix " << d << "\n";
  out << "wires " << circuit.spec().count() << "\n";
  for (const Gate &g : circuit.gates()) {
    const auto &w = g.wires;
    switch (g.kind) {
    case GateKind::OpaqueBlock:
      out << "block";
      for (Wire x : w) {
        out << " " << x;
      }
      out << "\n";
      continue;
    case GateKind::NegatedSum:
      out << "cxt " << w[0] << " " << w[1] << "\n";
      continue;
    case GateKind::ControlledIncrement:
      if (w.size() == 1 && g.modulus == d) {
        out << "x " << w[0] << " " << g.increment << "\n";
        continue;
      }
      if (w.size() == 2 && g.level == d - 1 && g.modulus == d) {
        out << "cx " << w[0] << " " << w[1] << " " << g.increment << "\n";
        continue;
      }
      if (w.size() == 2 && g.level == d - 1 && g.modulus == 2 * d &&
          std::abs(g.increment) == d) {
        out << (g.increment > 0 ? "cdx " : "cdx- ") << w[0] << " " << w[1]
            << "\n";
        continue;
      }
      break;
    case GateKind::ConditionalIncrement:
      if (g.level == d - 1 && g.modulus == 2 * d && std::abs(g.increment) == d) {
        out << (g.increment > 0 ? "cdxc " : "cdxc- ") << w[0] << " " << w[1]
            << "\n";
        continue;
      }
      if (g.level == d - 1 && g.modulus == d) {
        out << "caxc " << w[0] << " " << w[1] << " " << g.increment << "\n";
        continue;
      }
      break;
    }
    throw InvalidArgumentError(to_string(g) + " has no textual form");
  }
}

std::string print_circuit(const Circuit &circuit) {
  std::ostringstream os;
  print_circuit(os, circuit);
  return os.str();
}

CouplingGraph parse_topology(std::istream &in) {
  std::size_t line_no = 0;
  std::optional<CouplingGraph> graph;
  while (auto st = next_statement(in, line_no)) {
    const std::string &op = st->tokens[0];
    if (op == "nodes") {
      if (graph) {
        throw ParseError(st->line, "duplicate 'nodes'");
      }
      expect_arity(*st, 1);
      const long long m = to_integer(*st, 1);
      if (m < 1) {
        throw ParseError(st->line, "node count must be at least 1");
      }
      graph.emplace(static_cast<std::size_t>(m));
    } else if (op == "edge") {
      if (!graph) {
        throw ParseError(st->line, "'edge' before 'nodes'");
      }
      expect_arity(*st, 2);
      const Wire u = to_wire(*st, 1, graph->node_count());
      const Wire v = to_wire(*st, 2, graph->node_count());
      if (u == v) {
        throw ParseError(st->line, "self-loop on node " + std::to_string(u));
      }
      graph->add_edge(u, v);
    } else {
      throw ParseError(st->line, "unknown statement '" + op + "'");
    }
  }
  if (!graph) {
    throw ParseError(line_no, "missing 'nodes' line");
  }
  return *std::move(graph);
}

CouplingGraph parse_topology(const std::string &text) {
  std::istringstream in(text);
  return parse_topology(in);
}

void print_topology(std::ostream &out, const CouplingGraph &graph) {
  out << "nodes " << graph.node_count() << "\n";
  for (const auto &[u, v] : graph.edges()) {
    out << "edge " << u << " " << v << "\n";
  }
}

Circuit load_circuit(const std::filesystem::path &path) {
  auto in = open(path);
  return parse_circuit(in);
}

CouplingGraph load_topology(const std::filesystem::path &path) {
  auto in = open(path);
  return parse_topology(in);
}

} // namespace qroute
