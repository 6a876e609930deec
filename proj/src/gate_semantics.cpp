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

#include "qroute/gate_semantics.hpp"

#include <cmath>
#include <string>

#include "qroute/errors.hpp"

namespace qroute {
namespace {

int wrap(int value, int modulus) {
  const int r = value % modulus;
  return r < 0 ? r + modulus : r;
}

void bump(int &target, const Gate &gate) {
  if (target < gate.modulus) {
    target = wrap(target + gate.increment, gate.modulus);
  }
}

} // namespace

void apply_local(const Gate &gate, std::span<int> levels) {
  switch (gate.kind) {
  case GateKind::ControlledIncrement:
    if (levels.size() == 1 || levels[0] == gate.level) {
      bump(levels.back(), gate);
    }
    return;
  case GateKind::ConditionalIncrement:
    if (levels[0] > gate.level) {
      bump(levels[1], gate);
    }
    return;
  case GateKind::NegatedSum: {
    const int d = gate.modulus;
    if (levels[0] >= d || levels[1] >= d) {
      throw OutOfSubspaceError(to_string(gate) +
                               " is undefined on promoted levels (" +
                               std::to_string(levels[0]) + "," +
                               std::to_string(levels[1]) + ")");
    }
    levels[1] = wrap(-levels[0] - levels[1], d);
    return;
  }
  case GateKind::OpaqueBlock:
    return;
  }
}

BasisAssignment apply_to_basis(const Gate &gate, const WireSpec &spec,
                               const BasisAssignment &basis) {
  if (basis.size() != spec.count()) {
    throw InvalidArgumentError("basis assignment has " +
                               std::to_string(basis.size()) +
                               " entries, expected " +
                               std::to_string(spec.count()));
  }
  for (int v : basis) {
    if (v < 0 || v >= spec.working_dim()) {
      throw InvalidArgumentError("basis level " + std::to_string(v) +
                                 " outside [0, " +
                                 std::to_string(spec.working_dim()) + ")");
    }
  }
  Circuit::validate(gate, spec);

  std::vector<int> local(gate.wires.size());
  for (std::size_t i = 0; i < gate.wires.size(); ++i) {
    local[i] = basis[gate.wires[i]];
  }
  apply_local(gate, local);
  BasisAssignment out = basis;
  for (std::size_t i = 0; i < gate.wires.size(); ++i) {
    out[gate.wires[i]] = local[i];
  }
  return out;
}

std::vector<int> local_dims(const Gate &gate, const WireSpec &spec) {
  const int d = spec.base_dim();
  switch (gate.kind) {
  case GateKind::ControlledIncrement:
    if (gate.wires.size() == 1) {
      return {gate.modulus};
    }
    return {gate.level < d ? d : spec.working_dim(), gate.modulus};
  case GateKind::ConditionalIncrement:
    return {spec.working_dim(), gate.modulus};
  case GateKind::NegatedSum:
    return {gate.modulus, gate.modulus};
  case GateKind::OpaqueBlock:
    break;
  }
  return std::vector<int>(gate.wires.size(), spec.working_dim());
}

UnitaryMatrix gate_matrix(const Gate &gate, const WireSpec &spec) {
  Circuit::validate(gate, spec);
  const std::vector<int> dims = local_dims(gate, spec);
  Eigen::Index dim = 1;
  for (int k : dims) {
    dim *= k;
  }

  UnitaryMatrix u = UnitaryMatrix::Zero(dim, dim);
  std::vector<int> levels(dims.size());
  for (Eigen::Index col = 0; col < dim; ++col) {
    Eigen::Index rest = col;
    for (std::size_t i = dims.size(); i-- > 0;) {
      levels[i] = static_cast<int>(rest % dims[i]);
      rest /= dims[i];
    }
    apply_local(gate, levels);
    Eigen::Index row = 0;
    for (std::size_t i = 0; i < dims.size(); ++i) {
      row = row * dims[i] + levels[i];
    }
    u(row, col) = 1.0;
  }
  return u;
}

bool is_permutation(const UnitaryMatrix &matrix, double tol) {
  if (matrix.rows() != matrix.cols()) {
    return false;
  }
  const Eigen::Index n = matrix.rows();
  std::vector<int> row_ones(n, 0);
  std::vector<int> col_ones(n, 0);
  for (Eigen::Index c = 0; c < n; ++c) {
    for (Eigen::Index r = 0; r < n; ++r) {
      const auto z = matrix(r, c);
      if (std::abs(z.imag()) > tol) {
        return false;
      }
      if (std::abs(z.real() - 1.0) <= tol) {
        ++row_ones[r];
        ++col_ones[c];
      } else if (std::abs(z.real()) > tol) {
        return false;
      }
    }
  }
  for (Eigen::Index i = 0; i < n; ++i) {
    if (row_ones[i] != 1 || col_ones[i] != 1) {
      return false;
    }
  }
  return true;
}

} // namespace qroute
