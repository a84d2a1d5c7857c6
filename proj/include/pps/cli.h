// Copyright 2026 The pps-sim Authors
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

#ifndef PPS_CLI_H
#define PPS_CLI_H

#include <iosfwd>
#include <span>
#include <string>
#include <vector>

namespace pps::cli {

/// Exit statuses of the command-line tool.
inline constexpr int kExitOk = 0;
inline constexpr int kExitCheckFailure = 1;
inline constexpr int kExitUsage = 2;

/// Start/stop/step grid, inclusive of both ends ("0:1:0.05"), or a single value.
struct GridSpec {
    std::vector<double> values;
    std::vector<std::string> labels;
};

/// Throws std::invalid_argument on malformed or empty grids.
GridSpec parse_grid(const std::string &text);

/// Runs one invocation. args excludes the program name.
int run(std::span<const std::string> args, std::ostream &out, std::ostream &err);

}  // namespace pps::cli

#endif
