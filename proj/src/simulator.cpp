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

#include "qroute/simulator.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <string>

#include "qroute/errors.hpp"

namespace qroute {
namespace {

std::size_t product(const std::vector<int> &dims) {
  std::size_t total = 1;
  for (int k : dims) {
    if (total > std::numeric_limits<std::size_t>::max() / k) {
      return std::numeric_limits<std::size_t>::max();
    }
    total *= static_cast<std::size_t>(k);
  }
  return total;
}

void check_gate_fits(const StateVector &state, const Gate &gate) {
  const auto &dims = state.dims();
  for (std::size_t i = 0; i < gate.wires.size(); ++i) {
    if (gate.wires[i] >= dims.size()) {
      throw InvalidArgumentError(to_string(gate) + ": wire out of range");
    }
    for (std::size_t j = 0; j < i; ++j) {
      if (gate.wires[i] == gate.wires[j]) {
        throw InvalidArgumentError(to_string(gate) + ": duplicate wire");
      }
    }
  }
  if (gate.is_increment() && dims[gate.target()] < gate.modulus) {
    throw InvalidArgumentError(to_string(gate) + ": modulus exceeds the " +
                               std::to_string(dims[gate.target()]) +
                               " levels of wire " +
                               std::to_string(gate.target()));
  }
  if (gate.kind == GateKind::NegatedSum &&
      (dims[gate.control()] < gate.modulus ||
       dims[gate.target()] < gate.modulus)) {
    throw InvalidArgumentError(to_string(gate) +
                               ": wires have fewer levels than the modulus");
  }
}

std::vector<int> working_dims(const WireSpec &spec) {
  return std::vector<int>(spec.count(), spec.working_dim());
}

// Moves the level of each wire w to wire perm[w].
StateVector relocate(const StateVector &state, const std::vector<Wire> &perm) {
  StateVector out(state.dims());
  for (std::size_t i = 0; i < state.size(); ++i) {
    if (state[i] == Amplitude{}) {
      continue;
    }
    const auto levels = state.levels_of(i);
    BasisAssignment moved(levels.size());
    for (std::size_t w = 0; w < levels.size(); ++w) {
      moved[perm[w]] = levels[w];
    }
    out[out.index_of(moved)] += state[i];
  }
  return out;
}

void check_perm(const std::optional<std::vector<Wire>> &perm, std::size_t n) {
  if (!perm) {
    return;
  }
  std::vector<bool> seen(n, false);
  if (perm->size() != n) {
    throw InvalidArgumentError("wire permutation has the wrong length");
  }
  for (Wire w : *perm) {
    if (w >= n || seen[w]) {
      throw InvalidArgumentError("wire permutation is not a bijection");
    }
    seen[w] = true;
  }
}

// Visits every assignment with all levels below `base`.
template <typename Fn>
void for_each_base_assignment(std::size_t wires, int base, Fn &&fn) {
  BasisAssignment levels(wires, 0);
  while (true) {
    fn(levels);
    std::size_t w = wires;
    while (w-- > 0) {
      if (++levels[w] < base) {
        break;
      }
      levels[w] = 0;
    }
    if (w == static_cast<std::size_t>(-1)) {
      return;
    }
  }
}

template <typename Expected>
EquivalenceReport compare_columns(const Circuit &routed, double tol,
                                  const SimulatorLimits &limits,
                                  Expected &&expected) {
  const WireSpec &spec = routed.spec();
  if (working_space_size(spec) > limits.max_state_dim) {
    throw TooLargeError("working space of " + std::to_string(spec.count()) +
                        " wires at " + std::to_string(spec.working_dim()) +
                        " levels exceeds the cap of " +
                        std::to_string(limits.max_state_dim));
  }
  const auto dims = working_dims(spec);
  EquivalenceReport report;
  for_each_base_assignment(spec.count(), spec.base_dim(),
                           [&](const BasisAssignment &input) {
                             const auto got = run(routed, basis_state(dims, input));
                             const StateVector want = expected(input);
                             for (std::size_t i = 0; i < got.size(); ++i) {
                               report.max_deviation = std::max(
                                   report.max_deviation, std::abs(got[i] - want[i]));
                             }
                             report.leakage = std::max(
                                 report.leakage,
                                 base_subspace_leakage(got, spec.base_dim()));
                           });
  report.pass = report.max_deviation <= tol && report.leakage <= tol;
  return report;
}

} // namespace

StateVector::StateVector(std::vector<int> dims) : dims_(std::move(dims)) {
  if (dims_.empty()) {
    throw InvalidArgumentError("state needs at least one wire");
  }
  for (int k : dims_) {
    if (k < 1) {
      throw InvalidArgumentError("wire dimension must be positive");
    }
  }
  strides_.assign(dims_.size(), 1);
  for (std::size_t w = dims_.size() - 1; w-- > 0;) {
    strides_[w] = strides_[w + 1] * static_cast<std::size_t>(dims_[w + 1]);
  }
  amplitudes_.assign(product(dims_), Amplitude{});
}

std::size_t StateVector::index_of(const BasisAssignment &levels) const {
  if (levels.size() != dims_.size()) {
    throw InvalidArgumentError("basis assignment has " +
                               std::to_string(levels.size()) +
                               " levels for " + std::to_string(dims_.size()) +
                               " wires");
  }
  std::size_t index = 0;
  for (std::size_t w = 0; w < dims_.size(); ++w) {
    if (levels[w] < 0 || levels[w] >= dims_[w]) {
      throw InvalidArgumentError("level " + std::to_string(levels[w]) +
                                 " on wire " + std::to_string(w) +
                                 " outside [0, " + std::to_string(dims_[w]) +
                                 ")");
    }
    index += static_cast<std::size_t>(levels[w]) * strides_[w];
  }
  return index;
}

BasisAssignment StateVector::levels_of(std::size_t index) const {
  BasisAssignment levels(dims_.size());
  for (std::size_t w = 0; w < dims_.size(); ++w) {
    levels[w] = static_cast<int>((index / strides_[w]) % dims_[w]);
  }
  return levels;
}

double StateVector::norm() const {
  double sum = 0.0;
  for (const auto &a : amplitudes_) {
    sum += std::norm(a);
  }
  return std::sqrt(sum);
}

StateVector basis_state(const std::vector<int> &dims,
                        const BasisAssignment &levels) {
  StateVector state(dims);
  state[state.index_of(levels)] = 1.0;
  return state;
}

StateVector random_base_state(const std::vector<int> &dims, int base_dim,
                              std::mt19937_64 &rng) {
  StateVector state(dims);
  std::normal_distribution<double> normal;
  double sum = 0.0;
  for (std::size_t i = 0; i < state.size(); ++i) {
    const auto levels = state.levels_of(i);
    if (std::all_of(levels.begin(), levels.end(),
                    [base_dim](int v) { return v < base_dim; })) {
      state[i] = Amplitude(normal(rng), normal(rng));
      sum += std::norm(state[i]);
    }
  }
  const double scale = 1.0 / std::sqrt(sum);
  for (auto &a : state.amplitudes()) {
    a *= scale;
  }
  return state;
}

void apply_gate(StateVector &state, const Gate &gate) {
  check_gate_fits(state, gate);
  if (gate.kind == GateKind::OpaqueBlock) {
    return;
  }
  const std::size_t arity = gate.wires.size();
  std::vector<std::size_t> strides(arity);
  std::vector<int> dims(arity);
  for (std::size_t i = 0; i < arity; ++i) {
    strides[i] = state.stride(gate.wires[i]);
    dims[i] = state.dims()[gate.wires[i]];
  }

  std::vector<Amplitude> out(state.size());
  std::vector<int> before(arity);
  std::vector<int> after(arity);
  for (std::size_t idx = 0; idx < state.size(); ++idx) {
    bool promoted = false;
    for (std::size_t i = 0; i < arity; ++i) {
      before[i] = static_cast<int>((idx / strides[i]) % dims[i]);
      promoted = promoted || before[i] >= gate.modulus;
    }
    const Amplitude amp = state[idx];
    if (gate.kind == GateKind::NegatedSum && promoted) {
      if (amp != Amplitude{}) {
        throw OutOfSubspaceError(to_string(gate) +
                                 " met amplitude on a promoted level");
      }
      out[idx] = amp;
      continue;
    }
    after = before;
    apply_local(gate, after);
    std::size_t dest = idx;
    for (std::size_t i = 0; i < arity; ++i) {
      dest = dest + static_cast<std::size_t>(after[i]) * strides[i] -
             static_cast<std::size_t>(before[i]) * strides[i];
    }
    out[dest] = amp;
  }
  state.amplitudes() = std::move(out);
}

StateVector run(const Circuit &circuit, StateVector state) {
  if (state.dims().size() != circuit.spec().count()) {
    throw InvalidArgumentError("state has " +
                               std::to_string(state.dims().size()) +
                               " wires, circuit has " +
                               std::to_string(circuit.spec().count()));
  }
  for (const auto &g : circuit.gates()) {
    apply_gate(state, g);
  }
  return state;
}

UnitaryMatrix circuit_unitary(const Circuit &circuit,
                              std::optional<std::vector<int>> dims,
                              const SimulatorLimits &limits) {
  const auto wire_dims = dims.value_or(working_dims(circuit.spec()));
  const std::size_t total = product(wire_dims);
  if (total > limits.max_unitary_dim) {
    throw TooLargeError("unitary of dimension " + std::to_string(total) +
                        " exceeds the cap of " +
                        std::to_string(limits.max_unitary_dim));
  }
  const auto n = static_cast<Eigen::Index>(total);
  UnitaryMatrix u(n, n);
  for (std::size_t col = 0; col < total; ++col) {
    StateVector state(wire_dims);
    state[col] = 1.0;
    const auto out = run(circuit, std::move(state));
    for (std::size_t row = 0; row < total; ++row) {
      u(static_cast<Eigen::Index>(row), static_cast<Eigen::Index>(col)) = out[row];
    }
  }
  return u;
}

double base_subspace_leakage(const StateVector &state, int base_dim) {
  for (int k : state.dims()) {
    if (k != 2 * base_dim) {
      throw InvalidArgumentError("leakage needs every wire at 2*base_dim levels");
    }
  }
  double mass = 0.0;
  for (std::size_t i = 0; i < state.size(); ++i) {
    if (state[i] == Amplitude{}) {
      continue;
    }
    const auto levels = state.levels_of(i);
    if (std::any_of(levels.begin(), levels.end(),
                    [base_dim](int v) { return v >= base_dim; })) {
      mass += std::norm(state[i]);
    }
  }
  return mass;
}

std::vector<Wire> wire_permutation(const Mapping &before, const Mapping &after) {
  if (before.size() != after.size()) {
    throw InvalidArgumentError("mappings differ in size");
  }
  std::vector<Wire> perm(before.size());
  for (Wire q = 0; q < before.size(); ++q) {
    perm[before.physical(q)] = after.physical(q);
  }
  return perm;
}

std::size_t working_space_size(const WireSpec &spec) {
  return product(working_dims(spec));
}

EquivalenceReport equivalence_on_base_subspace(
    const Circuit &routed, const Gate &ideal, const WireSpec &spec,
    const std::optional<std::vector<Wire>> &mapping_perm, double tol,
    const SimulatorLimits &limits) {
  if (routed.spec() != spec) {
    throw InvalidArgumentError("routed circuit and ideal gate disagree on wires");
  }
  check_perm(mapping_perm, spec.count());
  const UnitaryMatrix matrix = gate_matrix(ideal, spec);
  const auto local = local_dims(ideal, spec);
  const auto dims = working_dims(spec);

  return compare_columns(routed, tol, limits, [&](const BasisAssignment &input) {
    Eigen::Index col = 0;
    for (std::size_t i = 0; i < local.size(); ++i) {
      col = col * local[i] + input[ideal.wires[i]];
    }
    StateVector want(dims);
    for (Eigen::Index row = 0; row < matrix.rows(); ++row) {
      if (matrix(row, col) == Amplitude{}) {
        continue;
      }
      BasisAssignment out = input;
      Eigen::Index rest = row;
      for (std::size_t i = local.size(); i-- > 0;) {
        out[ideal.wires[i]] = static_cast<int>(rest % local[i]);
        rest /= local[i];
      }
      want[want.index_of(out)] += matrix(row, col);
    }
    return mapping_perm ? relocate(want, *mapping_perm) : want;
  });
}

EquivalenceReport equivalence_on_base_subspace(
    const Circuit &routed, const Circuit &ideal,
    const std::optional<std::vector<Wire>> &mapping_perm, double tol,
    const SimulatorLimits &limits) {
  if (routed.spec() != ideal.spec()) {
    throw InvalidArgumentError("routed and reference circuits disagree on wires");
  }
  check_perm(mapping_perm, routed.spec().count());
  const auto dims = working_dims(ideal.spec());
  return compare_columns(routed, tol, limits, [&](const BasisAssignment &input) {
    auto want = run(ideal, basis_state(dims, input));
    return mapping_perm ? relocate(want, *mapping_perm) : want;
  });
}

} // namespace qroute
