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

#include "sqkd/pistar.hpp"

#include <algorithm>
#include <cmath>
#include <string>
#include <vector>

#include "sqkd/entropy.hpp"
#include "sqkd/errors.hpp"
#include "sqkd/isometry.hpp"

namespace sqkd::attacks {

using linalg::MeasurementBasis;
using linalg::SubsystemLayout;

namespace {

bool is_z_basis(const QubitBasis& b) {
    const QubitBasis z = QubitBasis::z();
    return (b.v0 - z.v0).norm() == 0.0 && (b.v1 - z.v1).norm() == 0.0;
}

/// |a1 a2 e> on (A1, A2, E) with a qubit E.
StateVector ket3(int a1, int a2, const StateVector& e) {
    return linalg::tensor(linalg::tensor(StateVector::basis(2, static_cast<std::size_t>(a1)),
                                         StateVector::basis(2, static_cast<std::size_t>(a2))),
                          e);
}

const StateVector kZero{1.0, 0.0};

// Runs Bob's two-qubit preparation sqrt(p0)|00 0> + sign sqrt(p1)|11 b>
// through the attack.
DensityOperator run_pistar(const PiStarAttack& e, double sign, int b) {
    const std::size_t d = e.ancilla_dim();
    const SubsystemLayout layout{{Register::A1, 2}, {Register::A2, 2}, {Register::B, 2}, {Register::E, d}};
    StateVector psi(8 * d);
    psi[0] = std::sqrt(e.p0());  // |000>|0>
    psi[(6 + static_cast<std::size_t>(b)) * d] = sign * std::sqrt(1.0 - e.p0());
    const Register targets[] = {Register::A1, Register::A2, Register::E};
    const ComplexMatrix w = linalg::lift_operator(e.unitary(), layout, targets);
    return DensityOperator::from_pure(w * psi, layout);
}

DensityOperator key_register_view(const DensityOperator& full) {
    auto measured = linalg::measure_register(full, Register::A1, MeasurementBasis::Z);
    measured = linalg::measure_register(measured, Register::A2, MeasurementBasis::Z);
    return linalg::partial_trace(measured, {Register::A1, Register::E});
}

}  // namespace

PiStarAttack::PiStarAttack(double p0, ComplexMatrix unitary, std::size_t ancilla_dim, const Tolerances& tol)
    : p0_(p0), unitary_(std::move(unitary)), ancilla_dim_(ancilla_dim) {
    if (!(p0_ >= 0.0 && p0_ <= 1.0)) throw DomainError("PiStarAttack: p0 must lie in [0, 1]");
    if (unitary_.rows() != 4 * ancilla_dim_ || !unitary_.is_square()) {
        throw DimensionError("PiStarAttack: operator must be " + std::to_string(4 * ancilla_dim_) + "x" +
                             std::to_string(4 * ancilla_dim_));
    }
    const double res = unitary_.unitarity_residual();
    if (res > tol.unitary) {
        throw DomainError("PiStarAttack: operator not unitary (residual " + std::to_string(res) + ")");
    }
}

ComplexMatrix build_rewind(const RestrictedAttack& r, const Tolerances& tol) {
    if (!is_z_basis(r.basis())) throw DomainError("build_rewind: the rewind operator is defined for the Z basis only");
    const double q0 = r.q0();
    const double q1 = r.q1();
    const double s0 = std::sqrt(std::max(0.0, 1.0 - q0 * q0));
    const double s1 = std::sqrt(std::max(0.0, 1.0 - q1 * q1));
    const double n00 = 1.0 - q1 * q1 + q0 * q0;
    const double n11 = 1.0 - q0 * q0 + q1 * q1;

    ComplexMatrix rw(8, 2);
    if (n00 > tol.negligible_amplitude) {
        rw.set_column(0, (ket3(0, 0, kZero) * Complex(q0) + ket3(1, 0, r.f_state()) * Complex(s1)) *
                             Complex(1.0 / std::sqrt(n00)));
    } else {
        rw.set_column(0, ket3(0, 0, kZero));
    }
    if (n11 > tol.negligible_amplitude) {
        rw.set_column(1, (ket3(0, 1, r.e_state()) * Complex(s0) + ket3(1, 1, kZero) * Complex(q1)) *
                             Complex(1.0 / std::sqrt(n11)));
    } else {
        rw.set_column(1, ket3(1, 1, kZero));
    }
    return rw;
}

PiStarAttack derive_pistar_attack(const RestrictedAttack& r, const Tolerances& tol) {
    const std::size_t d = r.ancilla_dim();
    const ComplexMatrix rw = build_rewind(r, tol);

    // Embed the qubit E of Rw into C^d and place the columns at |000>, |110>.
    std::vector<linalg::PlacedColumn> cols;
    const std::size_t input_index[2] = {0, 3 * d};
    for (std::size_t c = 0; c < 2; ++c) {
        StateVector image(4 * d);
        for (std::size_t a = 0; a < 4; ++a)
            for (std::size_t j = 0; j < 2; ++j) image[a * d + j] = rw(a * 2 + j, c);
        cols.push_back({input_index[c], image});
    }
    const ComplexMatrix rw_full = linalg::complete_isometry_at(4 * d, cols, tol);

    const SubsystemLayout a1a2e{{Register::A1, 2}, {Register::A2, 2}, {Register::E, d}};
    const Register reverse_targets[] = {Register::A2, Register::E};
    const ComplexMatrix reverse = linalg::lift_operator(r.reverse(), a1a2e, reverse_targets);

    const double p0 = 0.5 * (1.0 - r.q1() * r.q1() + r.q0() * r.q0());
    return PiStarAttack(std::clamp(p0, 0.0, 1.0), reverse * rw_full, d, tol);
}

DensityOperator simulate_pistar(const PiStarAttack& e, BobOperation choice) {
    return run_pistar(e, 1.0, choice == BobOperation::MeasureResend ? 1 : 0);
}

TauSigmaMu build_tau_sigma_mu(const PiStarAttack& e, const Tolerances& tol) {
    TauSigmaMu out{key_register_view(simulate_pistar(e, BobOperation::Reflect)),
                   key_register_view(simulate_pistar(e, BobOperation::MeasureResend)),
                   key_register_view(run_pistar(e, -1.0, 0))};
    const ComplexMatrix residual = out.sigma.matrix() - (out.tau.matrix() + out.mu.matrix()) * Complex(0.5);
    const double dev = residual.max_abs();
    if (dev > tol.decomposition) {
        throw ConsistencyError("build_tau_sigma_mu: sigma != (tau + mu)/2, deviation " + std::to_string(dev));
    }
    return out;
}

double pistar_x_error(const PiStarAttack& e) {
    const auto reduced = linalg::partial_trace(simulate_pistar(e, BobOperation::Reflect), {Register::A1, Register::A2});
    double p = 0.0;
    for (int a = 0; a < 2; ++a) {
        const StateVector v = linalg::tensor(linalg::basis_state(MeasurementBasis::X, a),
                                             linalg::basis_state(MeasurementBasis::X, 1 - a));
        p += linalg::inner(v, reduced.matrix() * v).real();
    }
    return p;
}

double pistar_key_error_entropy(const PiStarAttack& e) {
    auto rho = simulate_pistar(e, BobOperation::MeasureResend);
    rho = linalg::measure_register(rho, Register::A1, MeasurementBasis::Z);
    rho = linalg::measure_register(rho, Register::B, MeasurementBasis::Z);
    return linalg::conditional_entropy(rho, {Register::A1}, {Register::B});
}

}  // namespace sqkd::attacks
