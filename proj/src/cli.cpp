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

#include "qroute/cli.hpp"

#include <algorithm>
#include <charconv>
#include <cmath>
#include <fstream>
#include <functional>
#include <iostream>
#include <random>
#include <sstream>

#include <CLI11.hpp>

#include "qroute/circuit_io.hpp"
#include "qroute/errors.hpp"
#include "qroute/simulator.hpp"

namespace qroute::cli {
namespace {

constexpr std::string_view kDigits = "0123456789abcdefghijklmnopqrstuvwxyz";

int guarded(std::ostream &err, const std::function<int()> &body) {
  try {
    return body();
  } catch (const NoPathError &e) {
    err << "error: " << e.what() << "\n";
    return kNoPath;
  } catch (const UnsupportedGateError &e) {
    err << "error: " << e.what() << "\n";
    return kUnsupportedGate;
  } catch (const TooLargeError &e) {
    err << "error: " << e.what() << "\n";
    return kTooLarge;
  } catch (const std::exception &e) {
    err << "error: " << e.what() << "\n";
    return kBadInput;
  }
}

void check_sizes(const Circuit &circuit, const CouplingGraph &graph) {
  if (circuit.spec().count() != graph.node_count()) {
    throw InvalidArgumentError(
        "circuit has " + std::to_string(circuit.spec().count()) +
        " wires but the topology has " + std::to_string(graph.node_count()) +
        " nodes");
  }
}

void write_routed(std::ostream &os, const RoutedResult &result) {
  const Circuit section = without_blocks(result.circuit);
  os << "# gate_count=" << gate_count(section) << "\n";
  os << "# depth=" << depth(section) << "\n";
  os << "# total_gate_count=" << result.gate_count << "\n";
  os << "# total_depth=" << result.depth << "\n";
  os << "# final_mapping=";
  const auto &l2p = result.final_mapping.logical_to_physical();
  for (std::size_t q = 0; q < l2p.size(); ++q) {
    os << (q ? " " : "") << l2p[q];
  }
  os << "\n";
  print_circuit(os, result.circuit);
}

std::string report_line(const EquivalenceReport &r) {
  return std::string(r.pass ? "PASS" : "FAIL") +
         " max_dev=" + format_real(r.max_deviation) +
         " leakage=" + format_real(r.leakage);
}

std::string digit_string(const BasisAssignment &levels) {
  std::string s;
  for (int v : levels) {
    s += kDigits[static_cast<std::size_t>(v)];
  }
  return s;
}

} // namespace

std::string format_real(double value) {
  if (value == 0.0) {
    return "0";
  }
  char buf[64];
  const auto [ptr, ec] = std::to_chars(buf, buf + sizeof buf, value);
  return std::string(buf, ptr);
}

int cmd_route(const RouteOptions &opts, std::ostream &out, std::ostream &err) {
  return guarded(err, [&] {
    const Circuit circuit = load_circuit(opts.circuit);
    const CouplingGraph graph = load_topology(opts.topology);
    check_sizes(circuit, graph);
    const auto result = route_circuit(
        circuit, graph, Mapping::identity(graph.node_count()), opts.method);
    for (const auto &w : result.warnings) {
      err << "warning: " << w << "\n";
    }
    if (opts.output.empty()) {
      write_routed(out, result);
    } else {
      std::ofstream file(opts.output, std::ios::binary);
      if (!file) {
        throw Error("cannot write " + opts.output.string());
      }
      write_routed(file, result);
    }
    return static_cast<int>(kOk);
  });
}

int cmd_verify(const VerifyOptions &opts, std::ostream &out, std::ostream &err) {
  return guarded(err, [&] {
    const Circuit circuit = load_circuit(opts.circuit);
    const CouplingGraph graph = load_topology(opts.topology);
    check_sizes(circuit, graph);
    const SimulatorLimits limits{opts.max_state_dim, SimulatorLimits{}.max_unitary_dim};
    if (working_space_size(circuit.spec()) > limits.max_state_dim) {
      throw TooLargeError(std::to_string(circuit.spec().count()) + " wires at " +
                          std::to_string(circuit.spec().working_dim()) +
                          " levels exceed the simulator cap of " +
                          std::to_string(limits.max_state_dim) + " amplitudes");
    }

    const auto initial = Mapping::identity(graph.node_count());
    const auto result = route_circuit(circuit, graph, initial, opts.method);

    EquivalenceReport total{0.0, 0.0, true};
    if (opts.routed) {
      const Circuit routed = load_circuit(*opts.routed);
      if (routed.spec() != circuit.spec()) {
        throw InvalidArgumentError("routed file disagrees with the circuit header");
      }
      total = equivalence_on_base_subspace(
          routed, circuit, wire_permutation(initial, result.final_mapping),
          opts.tolerance, limits);
    } else {
      for (std::size_t k = 0; k < result.sections.size(); ++k) {
        const auto &s = result.sections[k];
        const auto first = result.circuit.gates().begin();
        const Circuit part(circuit.spec(),
                           std::vector<Gate>(first + static_cast<std::ptrdiff_t>(s.begin),
                                             first + static_cast<std::ptrdiff_t>(s.end)));
        const auto r = equivalence_on_base_subspace(
            part, s.ideal, circuit.spec(), wire_permutation(s.before, s.after),
            opts.tolerance, limits);
        out << "gate " << s.input_index << ": " << report_line(r) << "\n";
        total.max_deviation = std::max(total.max_deviation, r.max_deviation);
        total.leakage = std::max(total.leakage, r.leakage);
        total.pass = total.pass && r.pass;
      }
    }
    out << report_line(total) << "\n";
    return static_cast<int>(total.pass ? kOk : kVerifyFailed);
  });
}

void write_cost_csv(std::ostream &out, const std::vector<CostRow> &rows) {
  out << "n,proposed_gates,proposed_depth,conventional_gates,conventional_depth\n";
  for (const auto &r : rows) {
    out << r.n << "," << r.proposed_gates << "," << r.proposed_depth << ","
        << r.conventional_gates << "," << r.conventional_depth << "\n";
  }
}

int cmd_table(const TableOptions &opts, std::ostream &out, std::ostream &err) {
  return guarded(err, [&] {
    const auto rows = cost_table(opts.n_min, opts.n_max);
    if (opts.csv.empty()) {
      write_cost_csv(out, rows);
    } else {
      std::ofstream file(opts.csv, std::ios::binary);
      if (!file) {
        throw Error("cannot write " + opts.csv.string());
      }
      write_cost_csv(file, rows);
    }
    return static_cast<int>(kOk);
  });
}

int cmd_simulate(const SimulateOptions &opts, std::ostream &out,
                 std::ostream &err) {
  return guarded(err, [&] {
    const Circuit circuit = load_circuit(opts.circuit);
    const WireSpec &spec = circuit.spec();
    if (static_cast<std::size_t>(spec.working_dim()) > kDigits.size()) {
      throw InvalidArgumentError("radix too large for digit-string output");
    }
    const std::vector<int> dims(spec.count(), spec.working_dim());
    if (working_space_size(spec) > SimulatorLimits{}.max_state_dim) {
      throw TooLargeError("state of " + std::to_string(working_space_size(spec)) +
                          " amplitudes exceeds the simulator cap");
    }

    std::optional<StateVector> state;
    if (opts.input) {
      const std::string &digits = *opts.input;
      if (digits.size() != spec.count()) {
        throw InvalidArgumentError("input has " + std::to_string(digits.size()) +
                                   " digits for " + std::to_string(spec.count()) +
                                   " wires");
      }
      BasisAssignment levels;
      for (char c : digits) {
        const auto pos = kDigits.find(static_cast<char>(std::tolower(c)));
        if (pos == std::string_view::npos ||
            pos >= static_cast<std::size_t>(spec.working_dim())) {
          throw InvalidArgumentError(std::string("input digit '") + c +
                                     "' outside [0, " +
                                     std::to_string(spec.working_dim()) + ")");
        }
        levels.push_back(static_cast<int>(pos));
      }
      state = basis_state(dims, levels);
    } else {
      std::mt19937_64 rng(opts.seed.value_or(0));
      state = random_base_state(dims, spec.base_dim(), rng);
    }

    const auto final_state = run(circuit, *std::move(state));
    for (std::size_t i = 0; i < final_state.size(); ++i) {
      const Amplitude a = final_state[i];
      if (std::norm(a) < 1e-12) {
        continue;
      }
      out << digit_string(final_state.levels_of(i)) << ": "
          << format_real(a.real()) << "," << format_real(a.imag()) << "\n";
    }
    return static_cast<int>(kOk);
  });
}

int run(const std::vector<std::string> &args, std::ostream &out,
        std::ostream &err) {
  CLI::App app{"Qudit-aware routing: relay long-range gates through borrowed "
               "upper levels instead of SWAP chains",
               "qroute"};
  app.require_subcommand(1);

  const std::map<std::string, RouteStrategy> strategies{
      {"swap-naive", RouteStrategy::SwapNaive},
      {"swap-balanced", RouteStrategy::SwapBalanced},
      {"ladder", RouteStrategy::QuditLadder}};
  const std::map<std::string, bool> on_off{{"on", true}, {"off", false}};

  RouteOptions route;
  auto *route_cmd = app.add_subcommand("route", "Route a circuit onto a topology");
  route_cmd->add_option("circuit", route.circuit, "Circuit file")->required();
  route_cmd->add_option("topology", route.topology, "Topology file")->required();
  route_cmd->add_option("--method", route.method.strategy, "Routing strategy")
      ->transform(CLI::CheckedTransformer(strategies, CLI::ignore_case))
      ->default_str("ladder");
  route_cmd->add_option("--restore", route.method.restore_mapping,
                        "Mirror SWAPs to restore the mapping")
      ->transform(CLI::CheckedTransformer(on_off))
      ->default_str("on");
  route_cmd->add_flag("--fallback", route.method.ladder_fallback,
                      "Route unsupported gates by SWAP instead of failing");
  route_cmd->add_option("--out", route.output, "Output file (default stdout)");

  VerifyOptions verify;
  auto *verify_cmd =
      app.add_subcommand("verify", "Check routed gates against the ideal gates");
  verify_cmd->add_option("circuit", verify.circuit, "Circuit file")->required();
  verify_cmd->add_option("topology", verify.topology, "Topology file")->required();
  verify_cmd->add_option("--method", verify.method.strategy, "Routing strategy")
      ->transform(CLI::CheckedTransformer(strategies, CLI::ignore_case))
      ->default_str("ladder");
  verify_cmd->add_option("--restore", verify.method.restore_mapping,
                         "Mirror SWAPs to restore the mapping")
      ->transform(CLI::CheckedTransformer(on_off))
      ->default_str("on");
  verify_cmd->add_flag("--fallback", verify.method.ladder_fallback,
                       "Route unsupported gates by SWAP instead of failing");
  verify_cmd->add_option("--tol", verify.tolerance, "Tolerance")
      ->default_str("1e-10");
  verify_cmd->add_option("--routed", verify.routed,
                         "Verify this routed file instead of routing afresh");
  verify_cmd->add_option("--cap", verify.max_state_dim,
                         "Largest state the simulator may allocate")
      ->default_str("65536");

  TableOptions table;
  auto *table_cmd =
      app.add_subcommand("table", "Gate count and depth, ladder vs SWAP");
  table_cmd->add_option("--n-min", table.n_min, "Smallest line length")->required();
  table_cmd->add_option("--n-max", table.n_max, "Largest line length")->required();
  table_cmd->add_option("--csv", table.csv, "Output CSV (default stdout)");

  SimulateOptions simulate;
  auto *simulate_cmd = app.add_subcommand("simulate", "Run a circuit on one input");
  simulate_cmd->add_option("circuit", simulate.circuit, "Circuit file")->required();
  auto *source = simulate_cmd->add_option_group("input state");
  source->add_option("--input", simulate.input, "Basis digit string");
  source->add_option("--random", simulate.seed,
                     "Seed for a random base-subspace superposition");
  source->require_option(1);

  try {
    std::vector<std::string> reversed(args.rbegin(), args.rend());
    app.parse(reversed);
  } catch (const CLI::ParseError &e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? kOk : kBadInput;
  }

  if (*route_cmd) {
    return cmd_route(route, out, err);
  }
  if (*verify_cmd) {
    return cmd_verify(verify, out, err);
  }
  if (*table_cmd) {
    return cmd_table(table, out, err);
  }
  return cmd_simulate(simulate, out, err);
}

} // namespace qroute::cli
