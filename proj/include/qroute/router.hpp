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

#pragma once

#include <cstddef>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "qroute/circuit.hpp"
#include "qroute/topology.hpp"

namespace qroute {

enum class RouteStrategy {
  /// Walk the control toward the target one SWAP at a time.
  SwapNaive,
  /// Walk both endpoints inward; opposite-end SWAPs share layers.
  SwapBalanced,
  /// Relay the control through borrowed upper levels; no SWAPs, the mapping
  /// never changes.
  QuditLadder,
};

struct RouteMethod {
  RouteStrategy strategy = RouteStrategy::QuditLadder;
  /// Mirror the SWAPs after each routed gate. Ignored by QuditLadder.
  bool restore_mapping = true;
  /// Let QuditLadder fall back to SwapBalanced for gates it cannot relay,
  /// recording a warning, instead of throwing UnsupportedGateError.
  bool ladder_fallback = false;
};

enum class SwapConfig {
  /// CNOT(v,u) CNOT(u,v) CNOT(v,u)
  A,
  /// CNOT(u,v) CNOT(v,u) CNOT(u,v)
  B,
};

/// Three-gate SWAP of wires u and v: CNOTs for d == 2, NegatedSum gates for
/// d > 2. Throws InvalidArgumentError when u == v.
[[nodiscard]] std::vector<Gate> swap_as_primitives(Wire u, Wire v, int d,
                                                   SwapConfig config = SwapConfig::A);

struct SwapRoute {
  std::vector<Gate> gates;
  /// Physical SWAPs in emission order, mirrors included.
  std::vector<std::pair<Wire, Wire>> swaps;
};

/// Routes a two-wire gate whose control sits on path.front() and target on
/// path.back() by SWAP insertion. `strategy` must be SwapNaive or
/// SwapBalanced. Throws RoutingContractError when the gate endpoints do not
/// match the path.
[[nodiscard]] SwapRoute route_gate_swap(const std::vector<Wire> &path,
                                        const Gate &gate, int d,
                                        RouteStrategy strategy, bool restore);

/// Ladder for a controlled increment that fires on d-1, from path.front()
/// to path.back(). Throws UnsupportedGateError for any other gate.
[[nodiscard]] std::vector<Gate> route_gate_ladder(const std::vector<Wire> &path,
                                                  const Gate &gate, int d);

/// True when route_gate_ladder accepts the gate.
[[nodiscard]] bool ladder_supports(const Gate &gate, int d);

/// One long-range gate of the input and the output gates that realize it.
struct RoutedSection {
  std::size_t input_index = 0;
  /// The gate as it would act on physical wires under `before`.
  Gate ideal;
  std::size_t begin = 0;
  std::size_t end = 0;
  Mapping before;
  Mapping after;
  RouteStrategy strategy = RouteStrategy::QuditLadder;
};

struct RoutedResult {
  Circuit circuit;
  Mapping final_mapping;
  std::size_t gate_count = 0;
  std::size_t depth = 0;
  std::vector<RoutedSection> sections;
  std::vector<std::string> warnings;
};

/// Routes every gate in program order. Gates already adjacent and opaque
/// blocks pass through on their current physical wires.
[[nodiscard]] RoutedResult route_circuit(const Circuit &circuit,
                                         const CouplingGraph &graph,
                                         const Mapping &initial,
                                         const RouteMethod &method);

struct CostRow {
  std::size_t n = 0;
  std::size_t proposed_gates = 0;
  std::size_t proposed_depth = 0;
  std::size_t conventional_gates = 0;
  std::size_t conventional_depth = 0;

  bool operator==(const CostRow &) const = default;
};

/// Measured cost of one CNOT across a line of n qubits, ladder against
/// balanced SWAP insertion with restore, for each n in [n_min, n_max].
/// Throws InvalidArgumentError unless 3 <= n_min <= n_max.
[[nodiscard]] std::vector<CostRow> cost_table(std::size_t n_min,
                                              std::size_t n_max);

} // namespace qroute
