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
#include <string>
#include <vector>

namespace sqkd::cli {

struct VerifyOptions {
    /// Random instances per check (per noise level for the symmetric-attack
    /// checks).
    std::size_t trials = 20;
    /// Ancilla dimensions, cycled over the trials.
    std::vector<std::size_t> d_e{2, 3, 4};
    std::uint64_t seed = 1;
    /// Replace every sampled attack by the noiseless identity attack.
    bool identity_attacks = false;
    /// Overrides every per-check tolerance when set.
    double tolerance_override = 0.0;
};

struct VerifyReport {
    std::string check;
    std::size_t trials = 0;
    double max_residual = 0.0;
    double tolerance = 0.0;
    bool pass = false;
};

/// Noise levels of the symmetric-attack checks.
inline constexpr double kVerifyNoiseLevels[] = {0.0, 0.02, 0.05, 0.1};

/// Runs thm1-equivalence, thm2-equivalence, lemma-trd, uncertainty,
/// continuity, main-ent, epsilon-bound and isometry, in that order. Each
/// trial draws from its own stream keyed by (seed, check, trial index).
std::vector<VerifyReport> run_verify(const VerifyOptions& options);

}  // namespace sqkd::cli
