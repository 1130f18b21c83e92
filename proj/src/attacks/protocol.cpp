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

#include "sqkd/protocol.hpp"

#include <cmath>
#include <numbers>
#include <string>
#include <vector>

#include "sqkd/errors.hpp"

namespace sqkd::attacks {

using linalg::Factor;
using linalg::MeasurementBasis;
using linalg::SubsystemLayout;

namespace {

const ComplexMatrix kCnot{{1, 0, 0, 0}, {0, 1, 0, 0}, {0, 0, 0, 1}, {0, 0, 1, 0}};

DensityOperator run_prepare_and_measure(const ComplexMatrix& forward, const ComplexMatrix& reverse,
                                        std::size_t ancilla_dim, const StateVector& alice_state, BobOperation op) {
    const StateVector psi = linalg::tensor(alice_state.normalized(), StateVector::basis(ancilla_dim, 0));
    auto rho = DensityOperator::from_pure(psi, SubsystemLayout{{Register::T, 2}, {Register::E, ancilla_dim}});
    rho = linalg::apply_unitary(rho, forward, {Register::T, Register::E});
    rho = bob_operation(rho, op);
    rho = linalg::apply_unitary(rho, reverse, {Register::T, Register::E});
    return linalg::reorder(rho, {Register::T, Register::B, Register::E});
}

DensityOperator run_entangled(const ComplexMatrix& forward, const ComplexMatrix& reverse, std::size_t ancilla_dim,
                              BobOperation op) {
    StateVector bell(4);
    bell[0] = bell[3] = (1.0 / std::numbers::sqrt2);
    const StateVector psi = linalg::tensor(bell, StateVector::basis(ancilla_dim, 0));
    auto rho = DensityOperator::from_pure(
        psi, SubsystemLayout{{Register::A1, 2}, {Register::A2, 2}, {Register::E, ancilla_dim}});
    rho = linalg::apply_unitary(rho, forward, {Register::A2, Register::E});
    rho = bob_operation(rho, op, Register::A2);
    rho = linalg::apply_unitary(rho, reverse, {Register::A2, Register::E});
    return linalg::reorder(rho, {Register::A1, Register::A2, Register::B, Register::E});
}

// Probability that the listed qubit registers read the given outcomes.
double outcome_probability(const DensityOperator& rho, std::span<const Register> regs, std::span<const int> bits,
                           MeasurementBasis basis) {
    const auto reduced = linalg::partial_trace(rho, regs);
    StateVector v = linalg::basis_state(basis, bits[0]);
    for (std::size_t k = 1; k < regs.size(); ++k) v = linalg::tensor(v, linalg::basis_state(basis, bits[k]));
    return linalg::inner(v, reduced.matrix() * v).real();
}

NoiseStats noise_stats(const ComplexMatrix& forward, const ComplexMatrix& reverse, std::size_t ancilla_dim) {
    NoiseStats stats;
    const auto states = alice_states();
    const Register t_only[] = {Register::T};
    const Register b_only[] = {Register::B};

    // Joint distribution of (B, T) with Alice sending |0>, |1> uniformly.
    double joint[2][2] = {{0.0, 0.0}, {0.0, 0.0}};
    const Register bt[] = {Register::B, Register::T};
    for (int i = 0; i < 2; ++i) {
        const auto rho = run_prepare_and_measure(forward, reverse, ancilla_dim, states[static_cast<std::size_t>(i)],
                                                 BobOperation::MeasureResend);
        const int flipped[] = {1 - i};
        stats.q_fwd += 0.5 * outcome_probability(rho, b_only, flipped, MeasurementBasis::Z);
        for (int b = 0; b < 2; ++b)
            for (int t = 0; t < 2; ++t) {
                const int bits[] = {b, t};
                joint[b][t] += 0.5 * outcome_probability(rho, bt, bits, MeasurementBasis::Z);
            }
    }
    int conditioned = 0;
    for (int b = 0; b < 2; ++b) {
        const double pb = joint[b][0] + joint[b][1];
        if (pb <= 0.0) continue;
        stats.q_rev += joint[b][1 - b] / pb;
        ++conditioned;
    }
    if (conditioned > 0) stats.q_rev /= conditioned;

    for (int s = 0; s < 2; ++s) {
        const auto rho = run_prepare_and_measure(forward, reverse, ancilla_dim, states[2 + static_cast<std::size_t>(s)],
                                                 BobOperation::Reflect);
        const int wrong[] = {1 - s};
        stats.q_x += 0.5 * outcome_probability(rho, t_only, wrong, MeasurementBasis::X);
    }
    return stats;
}

}  // namespace

std::array<StateVector, 4> alice_states() {
    return {linalg::basis_state(MeasurementBasis::Z, 0), linalg::basis_state(MeasurementBasis::Z, 1),
            linalg::basis_state(MeasurementBasis::X, 0), linalg::basis_state(MeasurementBasis::X, 1)};
}

DensityOperator bob_operation(const DensityOperator& state, BobOperation op, Register transit) {
    if (!state.layout().contains(transit)) {
        throw LabelError("bob_operation: no transit register " + std::string(linalg::to_string(transit)));
    }
    const auto fresh = DensityOperator::from_pure(StateVector::basis(2, 0), SubsystemLayout{{Register::B, 2}});
    auto out = linalg::tensor(state, fresh);
    if (op == BobOperation::MeasureResend) out = linalg::apply_unitary(out, kCnot, {transit, Register::B});
    return out;
}

DensityOperator simulate_sqkd(const CollectiveAttack& attack, const StateVector& alice_state, BobOperation op) {
    return run_prepare_and_measure(attack.forward(), attack.reverse(), attack.ancilla_dim(), alice_state, op);
}

DensityOperator simulate_sqkd(const RestrictedAttack& attack, const StateVector& alice_state, BobOperation op) {
    return run_prepare_and_measure(forward_unitary(attack), attack.reverse(), attack.ancilla_dim(), alice_state, op);
}

DensityOperator simulate_entangled_sqkd(const CollectiveAttack& attack, BobOperation op) {
    return run_entangled(attack.forward(), attack.reverse(), attack.ancilla_dim(), op);
}

DensityOperator simulate_entangled_sqkd(const RestrictedAttack& attack, BobOperation op) {
    return run_entangled(forward_unitary(attack), attack.reverse(), attack.ancilla_dim(), op);
}

NoiseStats estimate_noise_stats(const CollectiveAttack& attack) {
    return noise_stats(attack.forward(), attack.reverse(), attack.ancilla_dim());
}

NoiseStats estimate_noise_stats(const RestrictedAttack& attack) {
    return noise_stats(forward_unitary(attack), attack.reverse(), attack.ancilla_dim());
}

NoiseStats estimate_noise_stats(const SymmetricRestrictedAttack& attack) {
    return estimate_noise_stats(attack.expand());
}

}  // namespace sqkd::attacks
