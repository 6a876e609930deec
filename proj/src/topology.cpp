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

#include "qroute/topology.hpp"

#include <deque>
#include <limits>
#include <string>

#include "qroute/errors.hpp"

namespace qroute {

CouplingGraph::CouplingGraph(std::size_t node_count) : neighbors_(node_count) {
  if (node_count < 1) {
    throw InvalidArgumentError("coupling graph needs at least one node");
  }
}

void CouplingGraph::check(Wire u) const {
  if (u >= neighbors_.size()) {
    throw InvalidArgumentError("node " + std::to_string(u) +
                               " out of range [0, " +
                               std::to_string(neighbors_.size()) + ")");
  }
}

void CouplingGraph::add_edge(Wire u, Wire v) {
  check(u);
  check(v);
  if (u == v) {
    throw InvalidArgumentError("self-loop on node " + std::to_string(u));
  }
  neighbors_[u].insert(v);
  neighbors_[v].insert(u);
}

const std::set<Wire> &CouplingGraph::neighbors(Wire u) const {
  check(u);
  return neighbors_[u];
}

std::vector<std::pair<Wire, Wire>> CouplingGraph::edges() const {
  std::vector<std::pair<Wire, Wire>> out;
  for (Wire u = 0; u < neighbors_.size(); ++u) {
    for (Wire v : neighbors_[u]) {
      if (u < v) {
        out.emplace_back(u, v);
      }
    }
  }
  return out;
}

bool CouplingGraph::adjacent(Wire u, Wire v) const {
  check(u);
  check(v);
  return neighbors_[u].contains(v);
}

CouplingGraph line_graph(std::size_t n) {
  CouplingGraph g(n);
  for (std::size_t i = 0; i + 1 < n; ++i) {
    g.add_edge(static_cast<Wire>(i), static_cast<Wire>(i + 1));
  }
  return g;
}

std::vector<std::size_t> bfs_distances(const CouplingGraph &graph,
                                       Wire source) {
  constexpr auto unreachable = std::numeric_limits<std::size_t>::max();
  std::vector<std::size_t> dist(graph.node_count(), unreachable);
  std::deque<Wire> queue{source};
  dist.at(source) = 0;
  while (!queue.empty()) {
    const Wire u = queue.front();
    queue.pop_front();
    for (Wire w : graph.neighbors(u)) {
      if (dist[w] == unreachable) {
        dist[w] = dist[u] + 1;
        queue.push_back(w);
      }
    }
  }
  return dist;
}

std::vector<Wire> shortest_path(const CouplingGraph &graph, Wire u, Wire v) {
  if (u >= graph.node_count() || v >= graph.node_count()) {
    throw InvalidArgumentError("path endpoint out of range");
  }
  if (u == v) {
    throw InvalidArgumentError("path endpoints coincide");
  }
  // Distances to v, then a greedy walk from u through the smallest neighbor
  // one hop closer: this yields the lexicographically least shortest path.
  const auto to_v = bfs_distances(graph, v);
  if (to_v[u] == std::numeric_limits<std::size_t>::max()) {
    throw NoPathError("no path between physical wires " + std::to_string(u) +
                      " and " + std::to_string(v));
  }
  std::vector<Wire> path{u};
  Wire cur = u;
  while (cur != v) {
    for (Wire w : graph.neighbors(cur)) {
      if (to_v[w] + 1 == to_v[cur]) {
        cur = w;
        break;
      }
    }
    path.push_back(cur);
  }
  return path;
}

Mapping::Mapping(std::vector<Wire> logical_to_physical)
    : to_physical_(std::move(logical_to_physical)),
      to_logical_(to_physical_.size(), 0) {
  std::vector<bool> seen(to_physical_.size(), false);
  for (Wire q = 0; q < to_physical_.size(); ++q) {
    const Wire p = to_physical_[q];
    if (p >= to_physical_.size() || seen[p]) {
      throw InvalidArgumentError("mapping is not a bijection");
    }
    seen[p] = true;
    to_logical_[p] = q;
  }
}

Mapping Mapping::identity(std::size_t n) {
  std::vector<Wire> ids(n);
  for (std::size_t i = 0; i < n; ++i) {
    ids[i] = static_cast<Wire>(i);
  }
  return Mapping(std::move(ids));
}

void Mapping::swap_physical(Wire p, Wire q) {
  const Wire a = to_logical_.at(p);
  const Wire b = to_logical_.at(q);
  std::swap(to_logical_[p], to_logical_[q]);
  to_physical_[a] = q;
  to_physical_[b] = p;
}

} // namespace qroute
