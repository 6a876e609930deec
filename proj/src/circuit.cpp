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

#include "qroute/circuit.hpp"

#include <algorithm>
#include <cstdlib>
#include <sstream>

#include "qroute/errors.hpp"

namespace qroute {

WireSpec::WireSpec(int base_dim, std::size_t count)
    : base_dim_(base_dim), count_(count) {
  if (base_dim < 2) {
    throw InvalidSpecError("base dimension must be at least 2, got " +
                           std::to_string(base_dim));
  }
  if (count < 1) {
    throw InvalidSpecError("a circuit needs at least one wire");
  }
}

std::string to_string(GateKind kind) {
  switch (kind) {
  case GateKind::ControlledIncrement:
    return "ControlledIncrement";
  case GateKind::ConditionalIncrement:
    return "ConditionalIncrement";
  case GateKind::NegatedSum:
    return "NegatedSum";
  case GateKind::OpaqueBlock:
    return "OpaqueBlock";
  }
  return "?";
}

Gate Gate::controlled_increment(Wire control, Wire target, int activation,
                                int increment, int modulus) {
  return Gate{GateKind::ControlledIncrement, {control, target}, activation,
              increment, modulus};
}

Gate Gate::increment_by(Wire target, int increment, int modulus) {
  return Gate{GateKind::ControlledIncrement, {target}, 0, increment, modulus};
}

Gate Gate::conditional_increment(Wire control, Wire target, int threshold,
                                 int increment, int modulus) {
  return Gate{GateKind::ConditionalIncrement, {control, target}, threshold,
              increment, modulus};
}

Gate Gate::negated_sum(Wire control, Wire target, int modulus) {
  return Gate{GateKind::NegatedSum, {control, target}, 0, 0, modulus};
}

Gate Gate::block(std::vector<Wire> wires) {
  return Gate{GateKind::OpaqueBlock, std::move(wires), 0, 0, 0};
}

Gate Gate::inverse() const {
  switch (kind) {
  case GateKind::ControlledIncrement:
  case GateKind::ConditionalIncrement: {
    Gate inv = *this;
    inv.increment = -increment;
    return inv;
  }
  case GateKind::NegatedSum:
    return *this;
  case GateKind::OpaqueBlock:
    break;
  }
  throw NonInvertibleError("opaque blocks have no inverse");
}

std::string to_string(const Gate &gate) {
  std::ostringstream os;
  os << to_string(gate.kind) << "(";
  for (std::size_t i = 0; i < gate.wires.size(); ++i) {
    os << (i ? "," : "") << gate.wires[i];
  }
  os << ")";
  if (gate.is_increment()) {
    os << "[level=" << gate.level << ",k=" << gate.increment
       << ",m=" << gate.modulus << "]";
  } else if (gate.kind == GateKind::NegatedSum) {
    os << "[d=" << gate.modulus << "]";
  }
  return os.str();
}

namespace gates {

Gate cnot(Wire control, Wire target) {
  return Gate::controlled_increment(control, target, 1, 1, 2);
}

Gate controlled_add(Wire control, Wire target, int d, int a) {
  return Gate::controlled_increment(control, target, d - 1, a, d);
}

Gate promote(Wire control, Wire target, int d) {
  return Gate::controlled_increment(control, target, d - 1, d, 2 * d);
}

Gate relay(Wire control, Wire target, int d) {
  return Gate::conditional_increment(control, target, d - 1, d, 2 * d);
}

Gate deliver(Wire control, Wire target, int d, int a) {
  return Gate::conditional_increment(control, target, d - 1, a, d);
}

} // namespace gates

void Circuit::validate(const Gate &gate, const WireSpec &spec) {
  const auto fail = [&](const std::string &why) {
    throw ValidationError(to_string(gate) + ": " + why);
  };
  if (gate.wires.empty()) {
    fail("gate has no wires");
  }
  for (std::size_t i = 0; i < gate.wires.size(); ++i) {
    if (gate.wires[i] >= spec.count()) {
      fail("wire " + std::to_string(gate.wires[i]) + " out of range [0, " +
           std::to_string(spec.count()) + ")");
    }
    for (std::size_t j = 0; j < i; ++j) {
      if (gate.wires[i] == gate.wires[j]) {
        fail("duplicate wire " + std::to_string(gate.wires[i]));
      }
    }
  }

  switch (gate.kind) {
  case GateKind::OpaqueBlock:
    return;
  case GateKind::NegatedSum:
    if (gate.wires.size() != 2) {
      fail("needs exactly two wires");
    }
    if (gate.modulus != spec.base_dim()) {
      fail("modulus must equal the base dimension " +
           std::to_string(spec.base_dim()));
    }
    return;
  case GateKind::ConditionalIncrement:
  case GateKind::ControlledIncrement:
    break;
  }

  // Only ControlledIncrement has an uncontrolled single-wire form.
  const std::size_t min_wires =
      gate.kind == GateKind::ControlledIncrement ? 1 : 2;
  if (gate.wires.size() < min_wires || gate.wires.size() > 2) {
    fail("wrong number of wires");
  }
  if (gate.modulus > spec.working_dim()) {
    fail("modulus exceeds the working dimension " +
         std::to_string(spec.working_dim()));
  }
  if (gate.modulus != spec.base_dim() && gate.modulus != spec.working_dim()) {
    fail("modulus must be the base or the working dimension");
  }
  const int step = std::abs(gate.increment);
  if (step < 1 || step >= gate.modulus) {
    fail("increment must satisfy 1 <= |k| < modulus");
  }
  if (gate.level < 0 || gate.level >= spec.working_dim()) {
    fail("control level out of range");
  }
}

Circuit::Circuit(int base_dim, std::size_t wire_count)
    : spec_(base_dim, wire_count) {}

Circuit::Circuit(WireSpec spec, std::vector<Gate> gates) : spec_(spec) {
  gates_.reserve(gates.size());
  for (auto &g : gates) {
    append(std::move(g));
  }
}

Circuit &Circuit::append(Gate gate) {
  validate(gate, spec_);
  gates_.push_back(std::move(gate));
  return *this;
}

Circuit &Circuit::append(std::initializer_list<Gate> gates) {
  for (const auto &g : gates) {
    append(g);
  }
  return *this;
}

std::size_t gate_count(const Circuit &circuit) { return circuit.size(); }

std::size_t depth(const Circuit &circuit) {
  std::vector<std::size_t> frontier(circuit.spec().count(), 0);
  std::size_t result = 0;
  for (const auto &g : circuit.gates()) {
    std::size_t layer = 0;
    for (Wire w : g.wires) {
      layer = std::max(layer, frontier[w]);
    }
    ++layer;
    for (Wire w : g.wires) {
      frontier[w] = layer;
    }
    result = std::max(result, layer);
  }
  return result;
}

Circuit inverse(const Circuit &circuit) {
  Circuit out(circuit.spec());
  for (auto it = circuit.gates().rbegin(); it != circuit.gates().rend(); ++it) {
    out.append(it->inverse());
  }
  return out;
}

Circuit without_blocks(const Circuit &circuit) {
  Circuit out(circuit.spec());
  for (const auto &g : circuit.gates()) {
    if (g.kind != GateKind::OpaqueBlock) {
      out.append(g);
    }
  }
  return out;
}

} // namespace qroute
