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

#include <complex>
#include <cstddef>
#include <optional>
#include <random>
#include <vector>

#include "qroute/circuit.hpp"
#include "qroute/gate_semantics.hpp"
#include "qroute/topology.hpp"

namespace qroute {

using Amplitude = std::complex<double>;

/// Dense amplitudes over a mixed-radix index space. Wire 0 is the most
/// significant digit.
class StateVector {
public:
  /// All-zero vector. Throws InvalidArgumentError on empty dims or a
  /// dimension below 1.
  explicit StateVector(std::vector<int> dims);

  [[nodiscard]] const std::vector<int> &dims() const { return dims_; }
  [[nodiscard]] std::size_t size() const { return amplitudes_.size(); }
  [[nodiscard]] std::vector<Amplitude> &amplitudes() { return amplitudes_; }
  [[nodiscard]] const std::vector<Amplitude> &amplitudes() const {
    return amplitudes_;
  }
  Amplitude &operator[](std::size_t i) { return amplitudes_[i]; }
  const Amplitude &operator[](std::size_t i) const { return amplitudes_[i]; }

  [[nodiscard]] std::size_t stride(std::size_t wire) const {
    return strides_[wire];
  }
  [[nodiscard]] std::size_t index_of(const BasisAssignment &levels) const;
  [[nodiscard]] BasisAssignment levels_of(std::size_t index) const;
  [[nodiscard]] double norm() const;

private:
  std::vector<int> dims_;
  std::vector<std::size_t> strides_;
  std::vector<Amplitude> amplitudes_;
};

/// Throws InvalidArgumentError when a level does not fit its wire.
[[nodiscard]] StateVector basis_state(const std::vector<int> &dims,
                                      const BasisAssignment &levels);

/// Normalized random superposition supported on levels < base_dim.
[[nodiscard]] StateVector random_base_state(const std::vector<int> &dims,
                                            int base_dim, std::mt19937_64 &rng);

/// Relocates amplitudes according to the gate's basis permutation.
/// NegatedSum throws OutOfSubspaceError if any amplitude sits on a promoted
/// level of its wires.
void apply_gate(StateVector &state, const Gate &gate);

[[nodiscard]] StateVector run(const Circuit &circuit, StateVector state);

struct SimulatorLimits {
  /// Largest state the equivalence checker will allocate.
  std::size_t max_state_dim = std::size_t{1} << 16;
  /// Largest side of a dense circuit unitary.
  std::size_t max_unitary_dim = std::size_t{1} << 12;
};

/// Column j is run(circuit, |j>). `dims` defaults to the working dimension
/// on every wire. Throws TooLargeError above limits.max_unitary_dim.
[[nodiscard]] UnitaryMatrix circuit_unitary(
    const Circuit &circuit, std::optional<std::vector<int>> dims = std::nullopt,
    const SimulatorLimits &limits = {});

/// Probability on basis states with any wire at level >= base_dim.
[[nodiscard]] double base_subspace_leakage(const StateVector &state,
                                           int base_dim);

struct EquivalenceReport {
  double max_deviation = 0.0;
  double leakage = 0.0;
  bool pass = false;
};

/// perm[p] is where the value meant for physical wire p ends up, given the
/// mapping before and after a routed section.
[[nodiscard]] std::vector<Wire> wire_permutation(const Mapping &before,
                                                 const Mapping &after);

/// Compares `routed` with `ideal` on every base-subspace input column. The
/// ideal output is read off gate_matrix(ideal) and, when `mapping_perm` is
/// given, relocated by it. Throws TooLargeError when (2d)^n exceeds
/// limits.max_state_dim.
[[nodiscard]] EquivalenceReport equivalence_on_base_subspace(
    const Circuit &routed, const Gate &ideal, const WireSpec &spec,
    const std::optional<std::vector<Wire>> &mapping_perm, double tol,
    const SimulatorLimits &limits = {});

/// Same check against a whole reference circuit, simulated directly.
[[nodiscard]] EquivalenceReport equivalence_on_base_subspace(
    const Circuit &routed, const Circuit &ideal,
    const std::optional<std::vector<Wire>> &mapping_perm, double tol,
    const SimulatorLimits &limits = {});

/// (2d)^n for the spec, saturating at SIZE_MAX.
[[nodiscard]] std::size_t working_space_size(const WireSpec &spec);

} // namespace qroute
