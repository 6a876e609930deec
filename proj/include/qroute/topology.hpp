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
#include <set>
#include <utility>
#include <vector>

#include "qroute/circuit.hpp"

namespace qroute {

/// Undirected hardware coupling graph over physical wires [0, node_count).
class CouplingGraph {
public:
  explicit CouplingGraph(std::size_t node_count);

  /// Throws InvalidArgumentError on self-loops or out-of-range endpoints.
  void add_edge(Wire u, Wire v);

  [[nodiscard]] std::size_t node_count() const { return neighbors_.size(); }
  [[nodiscard]] const std::set<Wire> &neighbors(Wire u) const;
  /// Each edge once, as (min, max), sorted.
  [[nodiscard]] std::vector<std::pair<Wire, Wire>> edges() const;
  [[nodiscard]] bool adjacent(Wire u, Wire v) const;

private:
  void check(Wire u) const;

  std::vector<std::set<Wire>> neighbors_;
};

/// Path P0 - P1 - ... - P(n-1).
[[nodiscard]] CouplingGraph line_graph(std::size_t n);

/// Minimum-hop path from u to v, both endpoints included. Among equal-length
/// paths the lexicographically smallest node sequence wins. Throws
/// NoPathError when v is unreachable and InvalidArgumentError when u == v.
[[nodiscard]] std::vector<Wire> shortest_path(const CouplingGraph &graph,
                                              Wire u, Wire v);

/// Hop distances from `source`; unreachable nodes hold SIZE_MAX.
[[nodiscard]] std::vector<std::size_t> bfs_distances(const CouplingGraph &graph,
                                                     Wire source);

/// Bijection from logical wires to physical wires.
class Mapping {
public:
  /// Throws InvalidArgumentError unless `logical_to_physical` is a
  /// permutation of [0, n).
  explicit Mapping(std::vector<Wire> logical_to_physical);
  static Mapping identity(std::size_t n);

  [[nodiscard]] std::size_t size() const { return to_physical_.size(); }
  [[nodiscard]] Wire physical(Wire logical) const {
    return to_physical_.at(logical);
  }
  [[nodiscard]] Wire logical(Wire physical) const {
    return to_logical_.at(physical);
  }
  [[nodiscard]] const std::vector<Wire> &logical_to_physical() const {
    return to_physical_;
  }

  /// Exchanges the logical wires held by two physical wires.
  void swap_physical(Wire p, Wire q);

  bool operator==(const Mapping &other) const {
    return to_physical_ == other.to_physical_;
  }

private:
  std::vector<Wire> to_physical_;
  std::vector<Wire> to_logical_;
};

} // namespace qroute
