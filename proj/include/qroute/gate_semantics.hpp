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

#include <span>
#include <vector>

#include <Eigen/Dense>

#include "qroute/circuit.hpp"

namespace qroute {

/// One level per wire, wire 0 first.
using BasisAssignment = std::vector<int>;

using UnitaryMatrix = Eigen::MatrixXcd;

/// Applies `gate` in place to the levels of its own wires, given in gate
/// wire order (control first). Increments only touch targets below their
/// modulus; NegatedSum throws OutOfSubspaceError on levels >= its modulus.
void apply_local(const Gate &gate, std::span<int> levels);

/// Image of a full basis assignment. Throws InvalidArgumentError when the
/// assignment does not fit `spec`.
[[nodiscard]] BasisAssignment apply_to_basis(const Gate &gate,
                                             const WireSpec &spec,
                                             const BasisAssignment &basis);

/// Per-wire level counts used when a gate is written as a matrix. Controls
/// of plain controlled increments that fire below base_dim keep base_dim
/// levels, conditional controls keep the working dimension, and targets keep
/// exactly the modulus.
[[nodiscard]] std::vector<int> local_dims(const Gate &gate,
                                          const WireSpec &spec);

/// Permutation matrix over local_dims(gate); column b holds a 1 in the row
/// of apply_local(b). Index is mixed radix with the control digit first.
[[nodiscard]] UnitaryMatrix gate_matrix(const Gate &gate, const WireSpec &spec);

/// True iff every entry is within `tol` of 0 or 1 and each row and column
/// holds exactly one 1.
[[nodiscard]] bool is_permutation(const UnitaryMatrix &matrix,
                                  double tol = 1e-12);

} // namespace qroute
