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

// Test-only reference routes. Nothing here calls into the simulator or the
// router; each oracle recomputes its answer from first principles.

#include <algorithm>
#include <array>
#include <complex>
#include <cstddef>
#include <functional>
#include <limits>
#include <map>
#include <vector>

namespace qroute::oracle {

// Reference permutation tables, row-major, rows and columns in label
// order (control digit first).
inline constexpr std::array<std::array<int, 8>, 8> kPromoteTable{{
    {1, 0, 0, 0, 0, 0, 0, 0},
    {0, 1, 0, 0, 0, 0, 0, 0},
    {0, 0, 1, 0, 0, 0, 0, 0},
    {0, 0, 0, 1, 0, 0, 0, 0},
    {0, 0, 0, 0, 0, 0, 1, 0},
    {0, 0, 0, 0, 0, 0, 0, 1},
    {0, 0, 0, 0, 1, 0, 0, 0},
    {0, 0, 0, 0, 0, 1, 0, 0},
}};

inline constexpr std::array<std::array<int, 8>, 8> kDeliverTable{{
    {1, 0, 0, 0, 0, 0, 0, 0},
    {0, 1, 0, 0, 0, 0, 0, 0},
    {0, 0, 1, 0, 0, 0, 0, 0},
    {0, 0, 0, 1, 0, 0, 0, 0},
    {0, 0, 0, 0, 0, 1, 0, 0},
    {0, 0, 0, 0, 1, 0, 0, 0},
    {0, 0, 0, 0, 0, 0, 0, 1},
    {0, 0, 0, 0, 0, 0, 1, 0},
}};

inline constexpr std::array<std::array<int, 16>, 16> kRelayTable{{
    {1, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0},
    {0, 1, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0},
    {0, 0, 1, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0},
    {0, 0, 0, 1, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0},
    {0, 0, 0, 0, 1, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0},
    {0, 0, 0, 0, 0, 1, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0},
    {0, 0, 0, 0, 0, 0, 1, 0, 0, 0, 0, 0, 0, 0, 0, 0},
    {0, 0, 0, 0, 0, 0, 0, 1, 0, 0, 0, 0, 0, 0, 0, 0},
    {0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 1, 0, 0, 0, 0, 0},
    {0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 1, 0, 0, 0, 0},
    {0, 0, 0, 0, 0, 0, 0, 0, 1, 0, 0, 0, 0, 0, 0, 0},
    {0, 0, 0, 0, 0, 0, 0, 0, 0, 1, 0, 0, 0, 0, 0, 0},
    {0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 1, 0},
    {0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 1},
    {0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 1, 0, 0, 0},
    {0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 1, 0, 0},
}};

using Amp = std::complex<double>;
using Digits = std::vector<int>;

/// Sparse state keyed by per-wire levels.
using SparseState = std::map<Digits, Amp>;

/// Mixed-radix index, wire 0 most significant.
inline std::size_t encode(const Digits &levels, int radix) {
  std::size_t index = 0;
  for (int v : levels) {
    index = index * static_cast<std::size_t>(radix) + static_cast<std::size_t>(v);
  }
  return index;
}

inline Digits decode(std::size_t index, std::size_t wires, int radix) {
  Digits levels(wires);
  for (std::size_t w = wires; w-- > 0;) {
    levels[w] = static_cast<int>(index % static_cast<std::size_t>(radix));
    index /= static_cast<std::size_t>(radix);
  }
  return levels;
}

/// Sparse view of a dense vector over `radix` levels per wire.
inline SparseState sparse(const std::vector<Amp> &dense, std::size_t wires,
                          int radix) {
  SparseState out;
  for (std::size_t i = 0; i < dense.size(); ++i) {
    if (dense[i] != Amp{}) {
      out[decode(i, wires, radix)] += dense[i];
    }
  }
  return out;
}

inline int mod(int v, int m) { return ((v % m) + m) % m; }

/// Final state of the d-ary ladder from wire 0 to wire n-1: every term with
/// wire 0 at d-1 gets (t + a) % d on the last wire, all else untouched.
inline SparseState ladder_closed_form(const SparseState &in, int d, int a) {
  SparseState out;
  for (const auto &[levels, amp] : in) {
    Digits next = levels;
    if (levels.front() == d - 1) {
      next.back() = mod(levels.back() + a, d);
    }
    out[next] += amp;
  }
  return out;
}

/// State of the four-wire ladder after `stage` gates (0..5), term by term.
/// Stage 1 promotes wire 1, stage 2 promotes wire 2, stage 3 delivers to
/// wire 3, stages 4 and 5 uncompute wires 2 and 1.
inline SparseState four_wire_stage(const SparseState &in, int d, int a,
                                   int stage) {
  SparseState out;
  for (const auto &[levels, amp] : in) {
    Digits v = levels;
    if (levels[0] == d - 1) {
      const bool y_up = stage >= 1 && stage < 5;
      const bool z_up = stage >= 2 && stage < 4;
      if (y_up) {
        v[1] = (levels[1] + d) % (2 * d);
      }
      if (z_up) {
        v[2] = (levels[2] + d) % (2 * d);
      }
      if (stage >= 3) {
        v[3] = mod(levels[3] + a, d);
      }
    }
    out[v] += amp;
  }
  return out;
}

/// State of the three-wire ladder after `stage` gates (0..3).
inline SparseState three_wire_stage(const SparseState &in, int d, int a,
                                    int stage) {
  SparseState out;
  for (const auto &[levels, amp] : in) {
    Digits v = levels;
    if (levels[0] == d - 1) {
      if (stage == 1 || stage == 2) {
        v[1] = (levels[1] + d) % (2 * d);
      }
      if (stage >= 2) {
        v[2] = mod(levels[2] + a, d);
      }
    }
    out[v] += amp;
  }
  return out;
}

/// Swap permutation on two d-level wires: |x,y> -> |y,x>.
inline std::vector<std::vector<int>> swap_permutation(int d) {
  const int n = d * d;
  std::vector<std::vector<int>> m(n, std::vector<int>(n, 0));
  for (int x = 0; x < d; ++x) {
    for (int y = 0; y < d; ++y) {
      m[y * d + x][x * d + y] = 1;
    }
  }
  return m;
}

/// Brute-force evaluation of three NegatedSum steps in the given
/// control/target order on a pair (x, y). Each step is (control, target)
/// with wire 0 = x, wire 1 = y.
inline std::array<int, 2> negated_sum_chain(
    std::array<int, 2> v, int d, const std::vector<std::array<int, 2>> &steps) {
  for (const auto &[c, t] : steps) {
    v[t] = mod(-v[c] - v[t], d);
  }
  return v;
}

/// Every simple path from u to v by exhaustive DFS.
inline std::vector<std::vector<unsigned>> all_simple_paths(
    const std::vector<std::vector<unsigned>> &adj, unsigned u, unsigned v) {
  std::vector<std::vector<unsigned>> out;
  std::vector<unsigned> path{u};
  std::vector<bool> used(adj.size(), false);
  used[u] = true;
  std::function<void(unsigned)> dfs = [&](unsigned cur) {
    if (cur == v) {
      out.push_back(path);
      return;
    }
    for (unsigned w : adj[cur]) {
      if (!used[w]) {
        used[w] = true;
        path.push_back(w);
        dfs(w);
        path.pop_back();
        used[w] = false;
      }
    }
  };
  dfs(u);
  return out;
}

/// Shortest then lexicographically least, or empty when disconnected.
inline std::vector<unsigned> best_path(
    const std::vector<std::vector<unsigned>> &adj, unsigned u, unsigned v) {
  auto paths = all_simple_paths(adj, u, v);
  if (paths.empty()) {
    return {};
  }
  return *std::min_element(paths.begin(), paths.end(), [](const auto &a, const auto &b) {
    return a.size() != b.size() ? a.size() < b.size() : a < b;
  });
}

/// All-pairs hop distances by Floyd-Warshall.
inline std::vector<std::vector<std::size_t>> all_pairs_distance(
    const std::vector<std::vector<unsigned>> &adj) {
  constexpr std::size_t inf = std::numeric_limits<std::size_t>::max() / 4;
  const std::size_t n = adj.size();
  std::vector<std::vector<std::size_t>> dist(n, std::vector<std::size_t>(n, inf));
  for (std::size_t i = 0; i < n; ++i) {
    dist[i][i] = 0;
    for (unsigned j : adj[i]) {
      dist[i][j] = 1;
    }
  }
  for (std::size_t k = 0; k < n; ++k) {
    for (std::size_t i = 0; i < n; ++i) {
      for (std::size_t j = 0; j < n; ++j) {
        dist[i][j] = std::min(dist[i][j], dist[i][k] + dist[k][j]);
      }
    }
  }
  return dist;
}

} // namespace qroute::oracle
