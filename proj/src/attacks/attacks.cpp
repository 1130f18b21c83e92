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

#include "sqkd/attacks.hpp"

#include <algorithm>
#include <cmath>
#include <optional>
#include <string>
#include <vector>

#include "sqkd/errors.hpp"
#include "sqkd/isometry.hpp"

namespace sqkd::attacks {

using linalg::PlacedColumn;

namespace {

void require_unitary_on_transit(const ComplexMatrix& u, std::size_t ancilla_dim, const char* what,
                                const Tolerances& tol) {
    if (u.rows() != 2 * ancilla_dim || u.cols() != 2 * ancilla_dim) {
        throw DimensionError(std::string(what) + ": expected a " + std::to_string(2 * ancilla_dim) + "x" +
                             std::to_string(2 * ancilla_dim) + " operator, got " + std::to_string(u.rows()) + "x" +
                             std::to_string(u.cols()));
    }
    const double res = u.unitarity_residual();
    if (res > tol.unitary) {
        throw DomainError(std::string(what) + ": operator not unitary (residual " + std::to_string(res) + ")");
    }
}

/// |t> (x) |e> on T (x) E.
StateVector on_transit(int t, const StateVector& e) {
    return linalg::tensor(StateVector::basis(2, static_cast<std::size_t>(t)), e);
}

/// The E-component of psi for transit value t.
StateVector transit_component(const StateVector& psi, int t, std::size_t ancilla_dim) {
    StateVector out(ancilla_dim);
    for (std::size_t j = 0; j < ancilla_dim; ++j) out[j] = psi[static_cast<std::size_t>(t) * ancilla_dim + j];
    return out;
}

StateVector ancilla_from_eta(Complex eta) { return StateVector{eta, std::sqrt(std::max(0.0, 1.0 - std::norm(eta)))}; }

Complex clamp_to_disc(Complex z) {
    const double m = std::abs(z);
    return m > 1.0 ? z / m : z;
}

}  // namespace

QubitBasis QubitBasis::z() { return {StateVector{1.0, 0.0}, StateVector{0.0, 1.0}}; }

void QubitBasis::validate(const Tolerances& tol) const {
    if (v0.dim() != 2 || v1.dim() != 2) throw DimensionError("QubitBasis: vectors must be two-dimensional");
    const double dev =
        std::max({std::abs(v0.norm() - 1.0), std::abs(v1.norm() - 1.0), std::abs(linalg::inner(v0, v1))});
    if (dev > tol.orthonormal_input) throw DomainError("QubitBasis: not orthonormal");
}

CollectiveAttack::CollectiveAttack(ComplexMatrix forward, ComplexMatrix reverse, std::size_t ancilla_dim,
                                   const Tolerances& tol)
    : forward_(std::move(forward)), reverse_(std::move(reverse)), ancilla_dim_(ancilla_dim) {
    if (ancilla_dim_ == 0) throw DimensionError("CollectiveAttack: ancilla dimension 0");
    require_unitary_on_transit(forward_, ancilla_dim_, "CollectiveAttack forward", tol);
    require_unitary_on_transit(reverse_, ancilla_dim_, "CollectiveAttack reverse", tol);
}

CollectiveAttack CollectiveAttack::identity(std::size_t ancilla_dim) {
    return CollectiveAttack(ComplexMatrix::identity(2 * ancilla_dim), ComplexMatrix::identity(2 * ancilla_dim),
                            ancilla_dim);
}

CollectiveAttack CollectiveAttack::random(std::size_t ancilla_dim, linalg::SplitMix64& rng) {
    ComplexMatrix forward = linalg::haar_random_unitary(2 * ancilla_dim, rng);
    ComplexMatrix reverse = linalg::haar_random_unitary(2 * ancilla_dim, rng);
    return CollectiveAttack(std::move(forward), std::move(reverse), ancilla_dim);
}

double restriction_residual(double q0, double q1, Complex eta0, Complex eta1) {
    const double s0 = std::sqrt(std::max(0.0, 1.0 - q0 * q0));
    const double s1 = std::sqrt(std::max(0.0, 1.0 - q1 * q1));
    return std::abs(q0 * eta1 * s1 + q1 * std::conj(eta0) * s0);
}

RestrictedAttack::RestrictedAttack(double q0, double q1, Complex eta0, Complex eta1, ComplexMatrix reverse,
                                   std::size_t ancilla_dim, QubitBasis basis, const Tolerances& tol)
    : q0_(q0),
      q1_(q1),
      eta0_(eta0),
      eta1_(eta1),
      reverse_(std::move(reverse)),
      ancilla_dim_(ancilla_dim),
      basis_(std::move(basis)) {
    if (!(q0_ >= 0.0 && q0_ <= 1.0 && q1_ >= 0.0 && q1_ <= 1.0)) {
        throw DomainError("RestrictedAttack: q0, q1 must lie in [0, 1]");
    }
    if (std::abs(eta0_) > 1.0 || std::abs(eta1_) > 1.0) {
        throw DomainError("RestrictedAttack: |eta| must not exceed 1");
    }
    const double res = constraint_residual();
    if (res > tol.restriction) {
        throw DomainError("RestrictedAttack: restriction violated (residual " + std::to_string(res) + ")");
    }
    if (ancilla_dim_ < 2) throw DimensionError("RestrictedAttack: ancilla dimension must be at least 2");
    basis_.validate(tol);
    require_unitary_on_transit(reverse_, ancilla_dim_, "RestrictedAttack reverse", tol);
}

StateVector RestrictedAttack::e_state() const { return ancilla_from_eta(eta0_); }
StateVector RestrictedAttack::f_state() const { return ancilla_from_eta(eta1_); }

RestrictedAttack SymmetricRestrictedAttack::expand(const Tolerances& tol) const {
    if (!(q >= 0.0 && q <= 1.0)) throw DomainError("SymmetricRestrictedAttack: Q must lie in [0, 1]");
    const double qi = std::sqrt(1.0 - q);
    return RestrictedAttack(qi, qi, eta, -std::conj(eta), reverse, ancilla_dim, QubitBasis::z(), tol);
}

ComplexMatrix build_forward_isometry(const RestrictedAttack& r, const Tolerances& tol) {
    const double s0 = std::sqrt(std::max(0.0, 1.0 - r.q0() * r.q0()));
    const double s1 = std::sqrt(std::max(0.0, 1.0 - r.q1() * r.q1()));
    const StateVector image_v0 =
        on_transit(0, StateVector{1.0, 0.0}) * Complex(r.q0()) + on_transit(1, r.e_state()) * Complex(s0);
    const StateVector image_v1 =
        on_transit(0, r.f_state()) * Complex(s1) + on_transit(1, StateVector{1.0, 0.0}) * Complex(r.q1());

    // F|t> = sum_i <v_i|t> F|v_i>.
    ComplexMatrix f(4, 2);
    for (int t = 0; t < 2; ++t) {
        const auto ti = static_cast<std::size_t>(t);
        const StateVector col = image_v0 * std::conj(r.basis().v0[ti]) + image_v1 * std::conj(r.basis().v1[ti]);
        f.set_column(ti, col);
    }
    const double res = f.isometry_residual();
    if (res > tol.unitary) {
        throw DomainError("build_forward_isometry: F is not an isometry (residual " + std::to_string(res) + ")");
    }
    return f;
}

ComplexMatrix forward_unitary(const RestrictedAttack& r, const Tolerances& tol) {
    const ComplexMatrix f = build_forward_isometry(r, tol);
    const std::size_t d = r.ancilla_dim();
    std::vector<PlacedColumn> cols;
    for (std::size_t t = 0; t < 2; ++t) {
        StateVector image(2 * d);
        for (std::size_t tt = 0; tt < 2; ++tt)
            for (std::size_t j = 0; j < 2; ++j) image[tt * d + j] = f(tt * 2 + j, t);
        cols.push_back({t * d, image});
    }
    return linalg::complete_isometry_at(2 * d, cols, tol);
}

RestrictedDerivation derive_restricted(const CollectiveAttack& c, const QubitBasis& basis, const Tolerances& tol) {
    basis.validate(tol);
    const std::size_t d = c.ancilla_dim();
    if (d < 2) throw DimensionError("derive_restricted: ancilla dimension must be at least 2");
    const StateVector chi = StateVector::basis(d, 0);

    const StateVector out0 = c.forward() * linalg::tensor(basis.v0, chi);
    const StateVector out1 = c.forward() * linalg::tensor(basis.v1, chi);

    // comp[k] is the unnormalized amplitude vector in front of e_k.
    const StateVector comp[4] = {transit_component(out0, 0, d), transit_component(out0, 1, d),
                                 transit_component(out1, 0, d), transit_component(out1, 1, d)};
    const double alpha = comp[0].norm();
    const double beta = comp[3].norm();
    const double slack = tol.orthonormal_input;
    if (alpha > 1.0 + slack || beta > 1.0 + slack) {
        throw NumericalError("derive_restricted: forward amplitudes outside [0, 1]");
    }

    std::optional<StateVector> e[4];
    for (int k = 0; k < 4; ++k)
        if (comp[k].norm() > tol.negligible_amplitude) e[k] = comp[k].normalized();
    // Partners: e0 <-> e2 share T = 0, e1 <-> e3 share T = 1.
    constexpr int partner[4] = {2, 3, 0, 1};
    for (int k = 0; k < 2; ++k) {
        const int p = partner[k];
        if (!e[k] && !e[p]) e[k] = e[p] = chi;
    }
    for (int k = 0; k < 4; ++k)
        if (!e[k]) e[k] = e[partner[k]];

    const double q0 = std::min(alpha, 1.0);
    const double q1 = std::min(beta, 1.0);
    const Complex eta0 = clamp_to_disc(linalg::inner(*e[3], *e[1]));
    const Complex eta1 = clamp_to_disc(linalg::inner(*e[0], *e[2]));

    std::vector<PlacedColumn> cols = {{0, on_transit(0, *e[0])}, {d, on_transit(1, *e[3])}};
    const double threshold = 1.0 - tol.degenerate_eta;
    const bool degenerate1 = std::abs(eta1) >= threshold;
    const bool degenerate0 = std::abs(eta0) >= threshold;
    if (!degenerate1) {
        const StateVector g0 = (*e[2] - *e[0] * eta1) * Complex(1.0 / std::sqrt(1.0 - std::norm(eta1)));
        cols.push_back({1, on_transit(0, g0)});
    }
    if (!degenerate0) {
        const StateVector g1 = (*e[1] - *e[3] * eta0) * Complex(1.0 / std::sqrt(1.0 - std::norm(eta0)));
        cols.push_back({d + 1, on_transit(1, g1)});
    }
    ComplexMatrix v = linalg::complete_isometry_at(2 * d, cols, tol);

    RestrictedAttack attack(q0, q1, eta0, eta1, c.reverse() * v, d, basis, tol);
    return {std::move(attack), std::move(v), degenerate0, degenerate1};
}

RestrictedAttack random_restricted_attack(std::size_t ancilla_dim, linalg::SplitMix64& rng) {
    const double q0 = rng.uniform();
    const double q1 = rng.uniform();
    // Solve a * eta1 + b * conj(eta0) = 0 for the dependent eta.
    const double a = q0 * std::sqrt(1.0 - q1 * q1);
    const double b = q1 * std::sqrt(1.0 - q0 * q0);
    Complex eta0, eta1;
    if (a >= b) {
        eta0 = rng.uniform_disc();
        eta1 = a > 0.0 ? -(b / a) * std::conj(eta0) : rng.uniform_disc();
    } else {
        eta1 = rng.uniform_disc();
        eta0 = -(a / b) * std::conj(eta1);
    }
    ComplexMatrix reverse = linalg::haar_random_unitary(2 * ancilla_dim, rng);
    return RestrictedAttack(q0, q1, eta0, eta1, std::move(reverse), ancilla_dim);
}

SymmetricRestrictedAttack random_symmetric_attack(double q, linalg::SplitMix64& rng, std::size_t ancilla_dim) {
    if (!(q >= 0.0 && q <= 0.5)) throw DomainError("random_symmetric_attack: Q must lie in [0, 1/2]");
    if (ancilla_dim < 2) throw DimensionError("random_symmetric_attack: ancilla dimension must be at least 2");
    const Complex eta = rng.uniform_disc();

    const double c = std::sqrt(1.0 - q);  // cos(theta/2)
    const double s = std::sqrt(q);        // sin(theta/2)
    const ComplexMatrix rotation{{c, -s}, {s, c}};

    const ComplexMatrix w0 = linalg::haar_random_unitary(ancilla_dim, rng);
    const ComplexMatrix w1 = linalg::haar_random_unitary(ancilla_dim, rng);
    ComplexMatrix controlled(2 * ancilla_dim, 2 * ancilla_dim);
    for (std::size_t r = 0; r < ancilla_dim; ++r)
        for (std::size_t k = 0; k < ancilla_dim; ++k) {
            controlled(r, k) = w0(r, k);
            controlled(ancilla_dim + r, ancilla_dim + k) = w1(r, k);
        }
    ComplexMatrix reverse = controlled * linalg::tensor(rotation, ComplexMatrix::identity(ancilla_dim));
    return {q, eta, std::move(reverse), ancilla_dim};
}

}  // namespace sqkd::attacks
