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

#include "sqkd/attacks.hpp"
#include "sqkd/protocol.hpp"

namespace sqkd::attacks {

/// Attack on the protocol where Bob prepares
///   sqrt(p0)|000> + sqrt(1-p0)|11b>   over (A1, A2, B)
/// with b = 1 for MeasureResend and b = 0 for Reflect, and Eve applies
/// `unitary` to (A1, A2, E), E starting in |0>.
class PiStarAttack {
 public:
    /// DomainError unless 0 <= p0 <= 1 and `unitary` is a unitary of size
    /// 4 * ancilla_dim.
    PiStarAttack(double p0, ComplexMatrix unitary, std::size_t ancilla_dim, const Tolerances& tol = kDefaultTolerances);

    double p0() const { return p0_; }
    const ComplexMatrix& unitary() const { return unitary_; }
    std::size_t ancilla_dim() const { return ancilla_dim_; }

 private:
    double p0_;
    ComplexMatrix unitary_;
    std::size_t ancilla_dim_;
};

/// The rewind isometry as an 8x2 matrix over (A1, A2, E) with a qubit E.
/// Column 0 is
///   Rw|00> = (q0|000> + sqrt(1-q1^2)|10f>) / sqrt(1 - q1^2 + q0^2),
/// column 1 is
///   Rw|11> = (sqrt(1-q0^2)|01e> + q1|110>) / sqrt(1 - q0^2 + q1^2).
/// A column whose normalizer vanishes (q0 = 0, q1 = 1 or the reverse) is
/// never reached; it is set to |000> (resp. |110>), which keeps the columns
/// orthonormal. DomainError unless the attack is written in the Z basis.
ComplexMatrix build_rewind(const RestrictedAttack& r, const Tolerances& tol = kDefaultTolerances);

/// p0 = (1 - q1^2 + q0^2) / 2 and U = (I_A1 (x) U_reverse) Rw, with Rw
/// completed to a unitary on (A1, A2, E).
PiStarAttack derive_pistar_attack(const RestrictedAttack& r, const Tolerances& tol = kDefaultTolerances);

/// Pure joint state over (A1, A2, B, E) for Bob's choice.
DensityOperator simulate_pistar(const PiStarAttack& e, BobOperation choice);

/// Joint (A1^Z, E) states: tau from the Reflect run, sigma from the
/// MeasureResend run, mu from the auxiliary input sqrt(p0)|00> - sqrt(p1)|11>
/// (the Bell state phi_- when p0 = 1/2). Each has A1 measured in Z and
/// A2, B traced out.
struct TauSigmaMu {
    DensityOperator tau;
    DensityOperator sigma;
    DensityOperator mu;
};

/// Throws ConsistencyError if sigma deviates from (tau + mu) / 2 by more than
/// tol.decomposition in any entry.
TauSigmaMu build_tau_sigma_mu(const PiStarAttack& e, const Tolerances& tol = kDefaultTolerances);

/// Pr[A1 and A2 disagree in the X basis] on the Reflect state.
double pistar_x_error(const PiStarAttack& e);

/// H(A1^Z | B^Z) on the MeasureResend state: the error-correction cost.
double pistar_key_error_entropy(const PiStarAttack& e);

}  // namespace sqkd::attacks
