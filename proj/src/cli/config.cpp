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

#include "sqkd/cli/config.hpp"

#include <cerrno>
#include <cmath>
#include <cstdlib>

#include "sqkd/errors.hpp"

namespace sqkd::cli {

namespace {

constexpr char kExplicitPrefix[] = "explicit:";
constexpr std::size_t kMaxAncillaDim = 8;

}  // namespace

keyrate::QxModel parse_qx_model(const std::string& text) {
    if (text == "equal") return keyrate::QxModel::equal();
    if (text == "depolarizing") return keyrate::QxModel::depolarizing();
    if (text == "half") return keyrate::QxModel::half();
    const std::string prefix = kExplicitPrefix;
    if (text.rfind(prefix, 0) == 0) {
        const std::string number = text.substr(prefix.size());
        char* end = nullptr;
        errno = 0;
        const double v = std::strtod(number.c_str(), &end);
        if (number.empty() || end != number.c_str() + number.size() || errno != 0 || !std::isfinite(v)) {
            throw UsageError("--qx-model: cannot parse '" + number + "' as a number");
        }
        try {
            return keyrate::QxModel::explicit_value(v);
        } catch (const DomainError&) {
            throw UsageError("--qx-model: explicit value must lie in [0, 0.5]");
        }
    }
    throw UsageError("--qx-model: expected equal, depolarizing, half or explicit:<value>, got '" + text + "'");
}

void validate(const RunConfig& c) {
    if (c.tol && !(*c.tol > 0.0)) throw UsageError("--tol must be positive");
    switch (c.command) {
        case Command::Rate:
            if (!(c.q >= 0.0 && c.q <= 0.5)) throw UsageError("--q must lie in [0, 0.5]");
            break;
        case Command::Threshold:
            break;
        case Command::Curve:
            if (!(c.q_min >= 0.0 && c.q_min < c.q_max && c.q_max <= 0.5)) {
                throw UsageError("need 0 <= --q-min < --q-max <= 0.5");
            }
            if (c.steps < 2) throw UsageError("--steps must be at least 2");
            break;
        case Command::Verify:
            if (c.trials < 1) throw UsageError("--trials must be at least 1");
            if (c.d_e.empty()) throw UsageError("--d-e needs at least one dimension");
            for (std::size_t d : c.d_e) {
                if (d < 2 || d > kMaxAncillaDim) throw UsageError("--d-e dimensions must lie in [2, 8]");
            }
            break;
    }
}

}  // namespace sqkd::cli
