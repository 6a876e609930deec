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

#include <filesystem>
#include <iosfwd>
#include <string>

#include "qroute/circuit.hpp"
#include "qroute/topology.hpp"

namespace qroute {

// Circuit files are line oriented; '#' starts a comment.
//
//   radix <d>
//   wires <n>
//   cx <ctl> <tgt> <a>     target += a (mod d) when ctl == d-1
//   cxt <ctl> <tgt>        target <- -ctl - target (mod d)
//   x <wire> <k>           wire += k (mod d)
//   block <w1> [w2 ...]    opaque block
//   cdx <ctl> <tgt>        target += d (mod 2d) when ctl == d-1
//   cdxc <ctl> <tgt>       target += d (mod 2d) when ctl > d-1
//   caxc <ctl> <tgt> <a>   target += a (mod d) when ctl > d-1
//   cdx- / cdxc-           the same with -d
//
// Increments a and k are signed with 1 <= |a| < d, so inverses print too.

/// Throws ParseError carrying the 1-based line number.
[[nodiscard]] Circuit parse_circuit(std::istream &in);
[[nodiscard]] Circuit parse_circuit(const std::string &text);

/// Deterministic text form. Throws InvalidArgumentError for gates that have
/// no opcode.
void print_circuit(std::ostream &out, const Circuit &circuit);
[[nodiscard]] std::string print_circuit(const Circuit &circuit);

/// `nodes <m>` followed by `edge <u> <v>` lines.
[[nodiscard]] CouplingGraph parse_topology(std::istream &in);
[[nodiscard]] CouplingGraph parse_topology(const std::string &text);
void print_topology(std::ostream &out, const CouplingGraph &graph);

/// Throws Error when the file cannot be opened, ParseError on bad content.
[[nodiscard]] Circuit load_circuit(const std::filesystem::path &path);
[[nodiscard]] CouplingGraph load_topology(const std::filesystem::path &path);

} // namespace qroute
