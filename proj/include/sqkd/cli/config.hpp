// Copyright 2026 The sqkd-bound Authors
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

#include <cstdint>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include "sqkd/keyrate.hpp"

namespace sqkd::cli {

enum class Command { Rate, Threshold, Curve, Verify };
enum class OutputFormat { Csv, Json };

/// Bad flags or flag values. Maps to exit code 2.
class UsageError : public std::invalid_argument {
 public:
    using std::invalid_argument::invalid_argument;
};

struct RunConfig {
    Command command = Command::Rate;
    double q = 0.0;
    keyrate::QxModel qx_model = keyrate::QxModel::equal();
    double q_min = 0.0;
    double q_max = 0.1;
    std::size_t steps = 11;
    std::size_t trials = 20;
    std::vector<std::size_t> d_e{2, 3, 4};
    std::uint64_t seed = 1;
    /// Bisection precision for threshold, residual tolerance for verify.
    /// Unset means the command's default.
    std::optional<double> tol;
    OutputFormat format = OutputFormat::Csv;
    std::optional<std::string> output_path;
    bool identity_attacks = false;
};

/// equal | depolarizing | half | explicit:<value>. UsageError otherwise.
keyrate::QxModel parse_qx_model(const std::string& text);

/// Checks the fields the chosen command needs. UsageError on failure.
void validate(const RunConfig& config);

}  // namespace sqkd::cli
