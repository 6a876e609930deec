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
#include <filesystem>
#include <iosfwd>
#include <optional>
#include <string>
#include <vector>

#include "qroute/router.hpp"

namespace qroute::cli {

enum ExitCode : int {
  kOk = 0,
  kVerifyFailed = 1,
  kBadInput = 2,
  kNoPath = 3,
  kUnsupportedGate = 4,
  kTooLarge = 5,
};

struct RouteOptions {
  std::filesystem::path circuit;
  std::filesystem::path topology;
  RouteMethod method;
  /// Empty: write to `out`.
  std::filesystem::path output;
};

struct VerifyOptions {
  std::filesystem::path circuit;
  std::filesystem::path topology;
  RouteMethod method;
  double tolerance = 1e-10;
  /// Verify this routed file instead of routing `circuit` afresh.
  std::optional<std::filesystem::path> routed;
  std::size_t max_state_dim = std::size_t{1} << 16;
};

struct TableOptions {
  std::size_t n_min = 3;
  std::size_t n_max = 10;
  std::filesystem::path csv;
};

struct SimulateOptions {
  std::filesystem::path circuit;
  std::optional<std::string> input;
  std::optional<std::uint64_t> seed;
};

int cmd_route(const RouteOptions &opts, std::ostream &out, std::ostream &err);
int cmd_verify(const VerifyOptions &opts, std::ostream &out, std::ostream &err);
int cmd_table(const TableOptions &opts, std::ostream &out, std::ostream &err);
int cmd_simulate(const SimulateOptions &opts, std::ostream &out,
                 std::ostream &err);

/// Writes the cost table as CSV with LF line endings.
void write_cost_csv(std::ostream &out, const std::vector<CostRow> &rows);

/// Shortest round-trip decimal form; negative zero prints as 0.
[[nodiscard]] std::string format_real(double value);

/// Full command line without the program name.
int run(const std::vector<std::string> &args, std::ostream &out,
        std::ostream &err);

} // namespace qroute::cli
