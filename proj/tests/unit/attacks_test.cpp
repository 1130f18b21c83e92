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

#include <gtest/gtest.h>

#include "sqkd/entropy.hpp"
#include "sqkd/errors.hpp"
#include "sqkd/protocol.hpp"
#include "test_util.hpp"

using namespace sqkd;
using namespace sqkd::attacks;
using namespace sqkd::testing;

namespace {

ComplexMatrix pauli_x_on_transit(std::size_t d) {
    return linalg::tensor(ComplexMatrix{{0, 1}, {1, 0}}, ComplexMatrix::identity(d));
}

}  // namespace

TEST(restricted_attack, validation) {
    const ComplexMatrix id = ComplexMatrix::identity(4);
    EXPECT_NO_THROW(RestrictedAttack(1, 1, 0.3, 0.7, id, 2));
    EXPECT_THROW(RestrictedAttack(1.2, 1, 0, 0, id, 2), DomainError);
    EXPECT_THROW(RestrictedAttack(1, 1, 1.5, 0, id, 2), DomainError);
    // q0 = q1 = 0.8 with eta0 = eta1 = 0.5 leaves a nonzero restriction residual.
    EXPECT_THROW(RestrictedAttack(0.8, 0.8, 0.5, 0.5, id, 2), DomainError);
    EXPECT_THROW(RestrictedAttack(1, 1, 0, 0, ComplexMatrix::identity(2), 1), DimensionError);
    EXPECT_THROW(RestrictedAttack(1, 1, 0, 0, ComplexMatrix{{1, 1, 0, 0}, {0, 1, 0, 0}, {0, 0, 1, 0}, {0, 0, 0, 1}}, 2),
                 DomainError);
}

TEST(restriction_residual, matches_formula) {
    const double q0 = 0.6, q1 = 0.8;
    const Complex eta0(0.1, 0.2), eta1(-0.3, 0.05);
    const Complex expected = q0 * eta1 * std::sqrt(1 - q1 * q1) + q1 * std::conj(eta0) * std::sqrt(1 - q0 * q0);
    EXPECT_NEAR(restriction_residual(q0, q1, eta0, eta1), std::abs(expected), 1e-15);
}

TEST(forward_isometry, noiseless_embedding) {
    const RestrictedAttack r(1, 1, Complex(0.3, 0.1), Complex(-0.2, 0.4), ComplexMatrix::identity(4), 2);
    const ComplexMatrix f = build_forward_isometry(r);
    ASSERT_EQ(f.rows(), 4u);
    ASSERT_EQ(f.cols(), 2u);
    EXPECT_LE((f.column(0) - StateVector::basis(4, 0)).norm(), 1e-15);  // |0,0>
    EXPECT_LE((f.column(1) - StateVector::basis(4, 2)).norm(), 1e-15);  // |1,0>
}

TEST(forward_isometry, full_flip) {
    const Complex eta0(0.6, 0.0), eta1(0.0, -0.8);
    const RestrictedAttack r(0, 0, eta0, eta1, ComplexMatrix::identity(4), 2);
    const ComplexMatrix f = build_forward_isometry(r);
    const StateVector e = r.e_state();
    const StateVector fs = r.f_state();
    EXPECT_LE((f.column(0) - linalg::tensor(StateVector{0, 1}, e)).norm(), 1e-15);
    EXPECT_LE((f.column(1) - linalg::tensor(StateVector{1, 0}, fs)).norm(), 1e-15);
    EXPECT_LE(f.isometry_residual(), 1e-12);
}

TEST(forward_isometry, symmetric_flip_probability) {
    const double q = 0.1;
    const SymmetricRestrictedAttack sa{q, Complex(0, 0.5), ComplexMatrix::identity(4), 2};
    const RestrictedAttack r = sa.expand();
    EXPECT_LE(r.constraint_residual(), 1e-15);
    const ComplexMatrix f = build_forward_isometry(r);
    // Probability that T reads 1 - i on input i.
    const double flip0 = std::norm(f(2, 0)) + std::norm(f(3, 0));
    const double flip1 = std::norm(f(0, 1)) + std::norm(f(1, 1));
    EXPECT_NEAR(flip0, q, 1e-14);
    EXPECT_NEAR(flip1, q, 1e-14);
    EXPECT_NEAR(estimate_noise_stats(sa).q_fwd, q, 1e-12);
}

TEST(forward_unitary, is_unitary_and_extends_f) {
    auto rng = SplitMix64::stream(21, 0);
    for (std::size_t d = 2; d <= 4; ++d) {
        const RestrictedAttack r = random_restricted_attack(d, rng);
        const ComplexMatrix u = forward_unitary(r);
        const ComplexMatrix f = build_forward_isometry(r);
        ASSERT_LE(u.unitarity_residual(), 1e-10);
        for (std::size_t t = 0; t < 2; ++t)
            for (std::size_t out_t = 0; out_t < 2; ++out_t)
                for (std::size_t j = 0; j < 2; ++j)
                    ASSERT_NEAR(std::abs(u(out_t * d + j, t * d) - f(out_t * 2 + j, t)), 0, 1e-15);
    }
}

TEST(derive_restricted, identity_forward_is_noiseless) {
    const auto der = derive_restricted(CollectiveAttack::identity(3));
    EXPECT_DOUBLE_EQ(der.attack.q0(), 1.0);
    EXPECT_DOUBLE_EQ(der.attack.q1(), 1.0);
    EXPECT_TRUE(der.degenerate0);
    EXPECT_TRUE(der.degenerate1);
    EXPECT_LE(der.v.unitarity_residual(), 1e-12);
    // V fixes |0,0> and |1,0>, the only states F reaches.
    EXPECT_LE((der.v * StateVector::basis(6, 0) - StateVector::basis(6, 0)).norm(), 1e-14);
    EXPECT_LE((der.v * StateVector::basis(6, 3) - StateVector::basis(6, 3)).norm(), 1e-14);
}

TEST(derive_restricted, bit_flip_forward) {
    const CollectiveAttack c(pauli_x_on_transit(2), ComplexMatrix::identity(4), 2);
    const auto r = derive_restricted_attack(c);
    EXPECT_NEAR(r.q0(), 0.0, 1e-15);
    EXPECT_NEAR(r.q1(), 0.0, 1e-15);
}

TEST(derive_restricted, random_attacks_satisfy_restriction_and_equivalence) {
    for (std::uint64_t t = 0; t < 200; ++t) {
        auto rng = SplitMix64::stream(31, t);
        const std::size_t d = 2 + t % 3;
        const CollectiveAttack c = CollectiveAttack::random(d, rng);
        const auto der = derive_restricted(c);
        ASSERT_LE(der.attack.constraint_residual(), 1e-9);
        ASSERT_LE(der.v.unitarity_residual(), 1e-10);
        if (t % 10 != 0) continue;
        for (const auto& s : alice_states())
            for (auto op : {BobOperation::MeasureResend, BobOperation::Reflect})
                ASSERT_LE(linalg::trace_distance(simulate_sqkd(c, s, op), simulate_sqkd(der.attack, s, op)), 1e-9);
    }
}

TEST(derive_restricted, non_computational_basis) {
    const double s = 1.0 / std::sqrt(2.0);
    const QubitBasis hadamard{StateVector{s, s}, StateVector{s, -s}};
    for (std::uint64_t t = 0; t < 20; ++t) {
        auto rng = SplitMix64::stream(32, t);
        const CollectiveAttack c = CollectiveAttack::random(2 + t % 3, rng);
        const RestrictedAttack r = derive_restricted_attack(c, hadamard);
        ASSERT_LE(r.constraint_residual(), 1e-9);
        for (const auto& st : alice_states())
            for (auto op : {BobOperation::MeasureResend, BobOperation::Reflect})
                ASSERT_LE(linalg::trace_distance(simulate_sqkd(c, st, op), simulate_sqkd(r, st, op)), 1e-9);
    }
    EXPECT_THROW(derive_restricted(CollectiveAttack::identity(2), QubitBasis{StateVector{1, 0}, StateVector{1, 0}}),
                 DomainError);
}

TEST(random_restricted_attack, always_valid) {
    for (std::uint64_t t = 0; t < 200; ++t) {
        auto rng = SplitMix64::stream(33, t);
        const RestrictedAttack r = random_restricted_attack(2 + t % 3, rng);
        ASSERT_LE(r.constraint_residual(), 1e-12);
        ASSERT_LE(std::abs(r.eta0()), 1.0);
        ASSERT_LE(std::abs(r.eta1()), 1.0);
        ASSERT_LE(build_forward_isometry(r).isometry_residual(), 1e-10);
    }
}

TEST(random_symmetric_attack, range_and_constraint) {
    auto rng = SplitMix64::stream(34, 0);
    EXPECT_THROW(random_symmetric_attack(-0.1, rng), DomainError);
    EXPECT_THROW(random_symmetric_attack(0.6, rng), DomainError);
    for (double q : {0.0, 0.05, 0.1, 0.5}) {
        const auto sa = random_symmetric_attack(q, rng, 3);
        const RestrictedAttack r = sa.expand();
        EXPECT_LE(r.constraint_residual(), 1e-12);
        EXPECT_EQ(r.eta1(), -std::conj(r.eta0()));
        EXPECT_LE(r.reverse().unitarity_residual(), 1e-10);
    }
}
