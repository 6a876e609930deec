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

#include "qroute/router.hpp"

#include <algorithm>
#include <string>

#include "qroute/errors.hpp"

namespace qroute {
namespace {

Gate on_wires(Gate gate, Wire control, Wire target) {
  gate.wires = {control, target};
  return gate;
}

Gate to_physical(const Gate &gate, const Mapping &mapping) {
  Gate out = gate;
  for (Wire &w : out.wires) {
    w = mapping.physical(w);
  }
  return out;
}

void check_endpoints(const std::vector<Wire> &path, const Gate &gate) {
  if (path.size() < 2) {
    throw RoutingContractError("routing path needs at least two wires");
  }
  if (!gate.is_two_wire()) {
    throw RoutingContractError("only two-wire gates can be routed, got " +
                               to_string(gate));
  }
  if (gate.control() != path.front() || gate.target() != path.back()) {
    throw RoutingContractError(to_string(gate) +
                               " does not run between the path endpoints " +
                               std::to_string(path.front()) + " and " +
                               std::to_string(path.back()));
  }
}

} // namespace

std::vector<Gate> swap_as_primitives(Wire u, Wire v, int d, SwapConfig config) {
  if (u == v) {
    throw InvalidArgumentError("cannot swap a wire with itself");
  }
  const auto cx = [d](Wire c, Wire t) {
    return d == 2 ? gates::cnot(c, t) : Gate::negated_sum(c, t, d);
  };
  if (config == SwapConfig::A) {
    return {cx(v, u), cx(u, v), cx(v, u)};
  }
  return {cx(u, v), cx(v, u), cx(u, v)};
}

SwapRoute route_gate_swap(const std::vector<Wire> &path, const Gate &gate,
                          int d, RouteStrategy strategy, bool restore) {
  check_endpoints(path, gate);
  if (strategy == RouteStrategy::QuditLadder) {
    throw InvalidArgumentError("route_gate_swap needs a SWAP strategy");
  }
  const std::size_t n = path.size();
  const std::size_t hops = n - 2;
  // Control-side steps take the extra hop when the count is odd.
  const std::size_t control_steps =
      strategy == RouteStrategy::SwapNaive ? hops : (hops + 1) / 2;
  const std::size_t target_steps = hops - control_steps;

  SwapRoute route;
  for (std::size_t i = 0; i < std::max(control_steps, target_steps); ++i) {
    if (i < control_steps) {
      route.swaps.emplace_back(path[i], path[i + 1]);
    }
    if (i < target_steps) {
      route.swaps.emplace_back(path[n - 1 - i], path[n - 2 - i]);
    }
  }
  for (const auto &[u, v] : route.swaps) {
    const auto three = swap_as_primitives(u, v, d);
    route.gates.insert(route.gates.end(), three.begin(), three.end());
  }
  const std::size_t forward = route.gates.size();

  route.gates.push_back(
      on_wires(gate, path[control_steps], path[control_steps + 1]));

  if (restore) {
    for (std::size_t i = forward; i-- > 0;) {
      route.gates.push_back(route.gates[i].inverse());
    }
    const auto mirrored = std::vector(route.swaps.rbegin(), route.swaps.rend());
    route.swaps.insert(route.swaps.end(), mirrored.begin(), mirrored.end());
  }
  return route;
}

bool ladder_supports(const Gate &gate, int d) {
  return gate.kind == GateKind::ControlledIncrement && gate.wires.size() == 2 &&
         gate.level == d - 1 && gate.modulus == d;
}

std::vector<Gate> route_gate_ladder(const std::vector<Wire> &path,
                                    const Gate &gate, int d) {
  if (!ladder_supports(gate, d)) {
    throw UnsupportedGateError(
        to_string(gate) +
        " cannot be relayed: the ladder needs a controlled increment mod " +
        std::to_string(d) + " firing on " + std::to_string(d - 1));
  }
  check_endpoints(path, gate);
  const std::size_t n = path.size();
  if (n == 2) {
    return {gate};
  }

  std::vector<Gate> up;
  up.push_back(gates::promote(path[0], path[1], d));
  for (std::size_t i = 1; i + 2 < n; ++i) {
    up.push_back(gates::relay(path[i], path[i + 1], d));
  }

  std::vector<Gate> out = up;
  out.push_back(gates::deliver(path[n - 2], path[n - 1], d, gate.increment));
  for (auto it = up.rbegin(); it != up.rend(); ++it) {
    out.push_back(it->inverse());
  }
  return out;
}

RoutedResult route_circuit(const Circuit &circuit, const CouplingGraph &graph,
                           const Mapping &initial, const RouteMethod &method) {
  const WireSpec &spec = circuit.spec();
  if (spec.count() != graph.node_count()) {
    throw InvalidArgumentError(
        "circuit has " + std::to_string(spec.count()) +
        " wires but the coupling graph has " +
        std::to_string(graph.node_count()) + " nodes");
  }
  if (initial.size() != spec.count()) {
    throw InvalidArgumentError("initial mapping size does not match the circuit");
  }
  const int d = spec.base_dim();

  RoutedResult result{Circuit(spec), initial, 0, 0, {}, {}};
  Mapping &mapping = result.final_mapping;

  for (std::size_t idx = 0; idx < circuit.size(); ++idx) {
    const Gate physical = to_physical(circuit.gates()[idx], mapping);
    if (!physical.is_two_wire() ||
        graph.adjacent(physical.control(), physical.target())) {
      result.circuit.append(physical);
      continue;
    }

    const auto path = shortest_path(graph, physical.control(), physical.target());
    RoutedSection section{idx,     physical, result.circuit.size(), 0,
                          mapping, mapping,  method.strategy};

    if (section.strategy == RouteStrategy::QuditLadder &&
        !ladder_supports(physical, d)) {
      if (!method.ladder_fallback) {
        // Throws with the full diagnostic.
        (void)route_gate_ladder(path, physical, d);
      }
      result.warnings.push_back("gate " + std::to_string(idx) + " " +
                                to_string(circuit.gates()[idx]) +
                                ": not relayable, routed by balanced SWAP");
      section.strategy = RouteStrategy::SwapBalanced;
    }

    if (section.strategy == RouteStrategy::QuditLadder) {
      result.circuit.append_all(route_gate_ladder(path, physical, d));
    } else {
      const auto route = route_gate_swap(path, physical, d, section.strategy,
                                         method.restore_mapping);
      result.circuit.append_all(route.gates);
      for (const auto &[p, q] : route.swaps) {
        mapping.swap_physical(p, q);
      }
    }
    section.end = result.circuit.size();
    section.after = mapping;
    result.sections.push_back(std::move(section));
  }

  result.gate_count = gate_count(result.circuit);
  result.depth = depth(result.circuit);
  return result;
}

std::vector<CostRow> cost_table(std::size_t n_min, std::size_t n_max) {
  if (n_min < 3 || n_min > n_max) {
    throw InvalidArgumentError("cost table needs 3 <= n_min <= n_max");
  }
  std::vector<CostRow> rows;
  for (std::size_t n = n_min; n <= n_max; ++n) {
    Circuit circuit(2, n);
    circuit.append(gates::cnot(0, static_cast<Wire>(n - 1)));
    const auto graph = line_graph(n);
    const auto initial = Mapping::identity(n);

    const auto ladder = route_circuit(circuit, graph, initial,
                                      {RouteStrategy::QuditLadder, true, false});
    const auto swapped = route_circuit(
        circuit, graph, initial, {RouteStrategy::SwapBalanced, true, false});
    rows.push_back(CostRow{n, ladder.gate_count, ladder.depth,
                           swapped.gate_count, swapped.depth});
  }
  return rows;
}

} // namespace qroute
