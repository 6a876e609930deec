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
#include <cstdint>
#include <initializer_list>
#include <string>
#include <vector>

namespace qroute {

using Wire = std::uint32_t;

/// Number of wires and their radices. Every wire computes in base_dim levels
/// and may borrow levels [base_dim, 2*base_dim) as temporary storage.
class WireSpec {
public:
  /// Throws InvalidSpecError unless base_dim >= 2 and count >= 1.
  WireSpec(int base_dim, std::size_t count);

  [[nodiscard]] std::size_t count() const { return count_; }
  [[nodiscard]] int base_dim() const { return base_dim_; }
  [[nodiscard]] int working_dim() const { return 2 * base_dim_; }

  bool operator==(const WireSpec &) const = default;

private:
  int base_dim_;
  std::size_t count_;
};

enum class GateKind : std::uint8_t {
  /// target += increment (mod modulus) when control == level. A gate with a
  /// single wire has no control and always fires.
  ControlledIncrement,
  /// target += increment (mod modulus) when control > level.
  ConditionalIncrement,
  /// target <- (-control - target) mod modulus.
  NegatedSum,
  /// Opaque group of gates; identity semantics, one unit of cost.
  OpaqueBlock,
};

std::string to_string(GateKind kind);

/// One gate of the IR. For two-wire gates wires[0] is the control and
/// wires[1] the target. Gates carry no matrices; see gate_semantics.hpp.
struct Gate {
  GateKind kind = GateKind::OpaqueBlock;
  std::vector<Wire> wires;
  /// Activation value (ControlledIncrement) or threshold (ConditionalIncrement).
  int level = 0;
  /// Signed; normalized modulo `modulus` when applied.
  int increment = 0;
  int modulus = 0;

  static Gate controlled_increment(Wire control, Wire target, int activation,
                                   int increment, int modulus);
  /// Uncontrolled single-wire increment.
  static Gate increment_by(Wire target, int increment, int modulus);
  static Gate conditional_increment(Wire control, Wire target, int threshold,
                                    int increment, int modulus);
  static Gate negated_sum(Wire control, Wire target, int modulus);
  static Gate block(std::vector<Wire> wires);

  [[nodiscard]] bool is_increment() const {
    return kind == GateKind::ControlledIncrement ||
           kind == GateKind::ConditionalIncrement;
  }
  [[nodiscard]] bool is_two_wire() const {
    return kind != GateKind::OpaqueBlock && wires.size() == 2;
  }
  [[nodiscard]] Wire control() const { return wires.front(); }
  [[nodiscard]] Wire target() const { return wires.back(); }

  /// Increments negate their step; NegatedSum is self-inverse.
  /// Throws NonInvertibleError for OpaqueBlock.
  [[nodiscard]] Gate inverse() const;

  bool operator==(const Gate &) const = default;
};

std::string to_string(const Gate &gate);

/// The gates of the routing ladder, named by the role they play.
namespace gates {

/// Plain CNOT on qubits.
Gate cnot(Wire control, Wire target);
/// Ideal long-range gate: target += a (mod d) when control == d-1.
Gate controlled_add(Wire control, Wire target, int d, int a);
/// Lifts the target into the upper half when control == d-1 (C^{+d}_X).
Gate promote(Wire control, Wire target, int d);
/// Lifts the target into the upper half when control is promoted (C^{+d}_{X_c}).
Gate relay(Wire control, Wire target, int d);
/// target += a (mod d) when control is promoted (C^{+a}_{X_c}).
Gate deliver(Wire control, Wire target, int d, int a);

} // namespace gates

class Circuit {
public:
  Circuit(int base_dim, std::size_t wire_count);
  explicit Circuit(WireSpec spec) : spec_(spec) {}
  Circuit(WireSpec spec, std::vector<Gate> gates);

  [[nodiscard]] const WireSpec &spec() const { return spec_; }
  [[nodiscard]] const std::vector<Gate> &gates() const { return gates_; }
  [[nodiscard]] std::size_t size() const { return gates_.size(); }
  [[nodiscard]] bool empty() const { return gates_.empty(); }

  /// Validates and appends. Throws ValidationError.
  Circuit &append(Gate gate);
  Circuit &append(std::initializer_list<Gate> gates);
  template <typename Range> Circuit &append_all(const Range &range) {
    for (const auto &g : range) {
      append(g);
    }
    return *this;
  }

  /// Throws ValidationError when `gate` does not fit `spec`.
  static void validate(const Gate &gate, const WireSpec &spec);

  bool operator==(const Circuit &) const = default;

private:
  WireSpec spec_;
  std::vector<Gate> gates_;
};

[[nodiscard]] std::size_t gate_count(const Circuit &circuit);

/// ASAP layering; a gate lands one layer after the latest gate sharing a wire.
[[nodiscard]] std::size_t depth(const Circuit &circuit);

/// Reversed order, each gate inverted. Throws NonInvertibleError on blocks.
[[nodiscard]] Circuit inverse(const Circuit &circuit);

/// Same circuit with every OpaqueBlock dropped.
[[nodiscard]] Circuit without_blocks(const Circuit &circuit);

} // namespace qroute
