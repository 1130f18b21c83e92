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

#include <array>

#include "sqkd/attacks.hpp"
#include "sqkd/density.hpp"

namespace sqkd::attacks {

using linalg::DensityOperator;
using linalg::Register;

enum class BobOperation { MeasureResend, Reflect };

/// |0>, |1>, |+>, |-> in that order.
std::array<StateVector, 4> alice_states();

/// Appends Bob's register B in |0> and, for MeasureResend, applies a CNOT
/// from the transit qubit onto it (Reflect leaves the state untouched).
/// LabelError if `transit` is missing or B already exists.
DensityOperator bob_operation(const DensityOperator& state, BobOperation op, Register transit = Register::T);

/// One round of the prepare-and-measure protocol: Alice sends `alice_state`,
/// Eve applies the forward operator, Bob acts, Eve applies the reverse
/// operator. Returns the joint state over (T, B, E) before Alice measures.
DensityOperator simulate_sqkd(const CollectiveAttack& attack, const StateVector& alice_state, BobOperation op);
DensityOperator simulate_sqkd(const RestrictedAttack& attack, const StateVector& alice_state, BobOperation op);

/// As simulate_sqkd, but Alice keeps A1 of (|00> + |11>)/sqrt(2) and sends
/// A2 through the channel. Returns the state over (A1, A2, B, E).
DensityOperator simulate_entangled_sqkd(const CollectiveAttack& attack, BobOperation op);
DensityOperator simulate_entangled_sqkd(const RestrictedAttack& attack, BobOperation op);

/// Error statistics an attack induces.
struct NoiseStats {
    /// Forward Z flip probability, averaged over Alice sending |0> and |1>.
    double q_fwd = 0.0;
    /// Probability that Alice's final Z result differs from the bit Bob
    /// resent, conditioned on that bit and averaged over it.
    double q_rev = 0.0;
    /// Probability that Alice sends |+-> and finds |-+> on a Reflect round.
    double q_x = 0.0;
};

NoiseStats estimate_noise_stats(const CollectiveAttack& attack);
NoiseStats estimate_noise_stats(const RestrictedAttack& attack);
NoiseStats estimate_noise_stats(const SymmetricRestrictedAttack& attack);

}  // namespace sqkd::attacks
