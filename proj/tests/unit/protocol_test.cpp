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

#include <gtest/gtest.h>

#include "sqkd/entropy.hpp"
#include "sqkd/errors.hpp"
#include "test_util.hpp"

using namespace sqkd;
using namespace sqkd::attacks;
using namespace sqkd::testing;
using linalg::MeasurementBasis;
using linalg::SubsystemLayout;

namespace {

const double kS = 1.0 / std::sqrt(2.0);

DensityOperator pure(std::initializer_list<Complex> amps, const SubsystemLayout& l) {
    return DensityOperator::from_pure(StateVector(amps), l);
}

}  // namespace

TEST(alice_states, fixed_order_and_normalized) {
    const auto s = alice_states();
    EXPECT_EQ(s[0], (StateVector{1, 0}));
    EXPECT_EQ(s[1], (StateVector{0, 1}));
    EXPECT_NEAR(std::abs(s[2][0] - kS) + std::abs(s[2][1] - kS), 0.0, 1e-15);
    EXPECT_NEAR(std::abs(s[3][0] - kS) + std::abs(s[3][1] + kS), 0.0, 1e-15);
    for (const auto& v : s) EXPECT_TRUE(v.is_normalized(1e-15));
}

TEST(bob_operation, examples) {
    const SubsystemLayout t{{Register::T, 2}};
    const SubsystemLayout tb{{Register::T, 2}, {Register::B, 2}};
    auto rng = SplitMix64::stream(41, 0);
    const DensityOperator rho(random_density_matrix(2, rng), t);
    const auto reflected = bob_operation(rho, BobOperation::Reflect);
    EXPECT_LE(max_abs_diff(reflected.matrix(), linalg::tensor(rho.matrix(), linalg::projector(StateVector{1, 0}))),
              1e-15);

    const auto zero = bob_operation(pure({1, 0}, t), BobOperation::MeasureResend);
    EXPECT_LE(max_abs_diff(zero.matrix(), pure({1, 0, 0, 0}, tb).matrix()), 1e-15);

    const auto plus = bob_operation(pure({kS, kS}, t), BobOperation::MeasureResend);
    ComplexMatrix expected(4, 4);
    expected(0, 0) = expected(3, 3) = 0.5;
    // The CNOT purification keeps the |00>,|11> coherence; Bob's B register
    // is what records the outcome, so tracing B leaves the pinched T state.
    EXPECT_LE(
        max_abs_diff(linalg::partial_trace(plus, {Register::T}).matrix(), ComplexMatrix::identity(2) * Complex(0.5)),
        1e-15);
    EXPECT_LE(max_abs_diff(linalg::measure_register(plus, Register::B, MeasurementBasis::Z).matrix(), expected), 1e-15);

    EXPECT_THROW(bob_operation(DensityOperator::from_pure(StateVector{1, 0}, SubsystemLayout{{Register::A, 2}}),
                               BobOperation::Reflect),
                 LabelError);
}

TEST(simulate_sqkd, no_attack) {
    const auto c = CollectiveAttack::identity(2);
    const SubsystemLayout tbe{{Register::T, 2}, {Register::B, 2}, {Register::E, 2}};
    const auto out = simulate_sqkd(c, alice_states()[0], BobOperation::MeasureResend);
    EXPECT_EQ(out.layout(), tbe);
    EXPECT_LE(max_abs_diff(out.matrix(), linalg::projector(StateVector::basis(8, 0))), 1e-15);

    const auto reflect = simulate_sqkd(c, alice_states()[2], BobOperation::Reflect);
    EXPECT_LE(
        max_abs_diff(linalg::partial_trace(reflect, {Register::T}).matrix(), linalg::projector(alice_states()[2])),
        1e-15);
}

TEST(simulate_entangled_sqkd, no_attack) {
    const auto c = CollectiveAttack::identity(2);
    const auto reflect = simulate_entangled_sqkd(c, BobOperation::Reflect);
    StateVector phi(16);
    phi[0] = kS;   // |0 0 0 0>
    phi[12] = kS;  // |1 1 0 0>
    EXPECT_LE(max_abs_diff(reflect.matrix(), linalg::projector(phi)), 1e-15);

    const auto mr = linalg::partial_trace(simulate_entangled_sqkd(c, BobOperation::MeasureResend),
                                          {Register::A1, Register::A2, Register::B});
    ComplexMatrix expected(8, 8);
    expected(0, 0) = expected(7, 7) = 0.5;
    EXPECT_LE(max_abs_diff(linalg::measure_register(mr, Register::A1, MeasurementBasis::Z).matrix(), expected), 1e-15);
}

TEST(simulate_entangled_sqkd, reflect_state_matches_hand_assembled_amplitudes) {
    auto rng = SplitMix64::stream(42, 0);
    for (int trial = 0; trial < 20; ++trial) {
        const std::size_t d = 2 + static_cast<std::size_t>(trial % 3);
        const RestrictedAttack base = random_restricted_attack(d, rng);
        const RestrictedAttack r(base.q0(), base.q1(), base.eta0(), base.eta1(), ComplexMatrix::identity(2 * d), d);
        const StateVector e = r.e_state();
        const StateVector f = r.f_state();
        const double q0 = r.q0(), q1 = r.q1();
        // Index of |a1 a2 b j> in (A1, A2, B, E).
        auto idx = [d](std::size_t a1, std::size_t a2, std::size_t b, std::size_t j) {
            return ((a1 * 2 + a2) * 2 + b) * d + j;
        };
        StateVector psi(8 * d);
        psi[idx(0, 0, 0, 0)] += kS * q0;
        psi[idx(1, 1, 0, 0)] += kS * q1;
        for (std::size_t j = 0; j < 2; ++j) {
            psi[idx(0, 1, 0, j)] += kS * std::sqrt(1 - q0 * q0) * e[j];
            psi[idx(1, 0, 0, j)] += kS * std::sqrt(1 - q1 * q1) * f[j];
        }
        const auto out = simulate_entangled_sqkd(r, BobOperation::Reflect);
        ASSERT_LE(max_abs_diff(out.matrix(), linalg::projector(psi)), 1e-14);
    }
}

TEST(estimate_noise_stats, no_attack) {
    const auto stats = estimate_noise_stats(CollectiveAttack::identity(2));
    EXPECT_NEAR(stats.q_fwd, 0.0, 1e-15);
    EXPECT_NEAR(stats.q_rev, 0.0, 1e-15);
    EXPECT_NEAR(stats.q_x, 0.0, 1e-15);
}

TEST(estimate_noise_stats, symmetric_attacks_hit_target_error) {
    for (double q : {0.05, 0.1}) {
        for (std::uint64_t t = 0; t < 10; ++t) {
            auto rng = SplitMix64::stream(43, t);
            const auto sa = random_symmetric_attack(q, rng, 2 + t % 3);
            const auto stats = estimate_noise_stats(sa);
            ASSERT_NEAR(stats.q_fwd, q, 1e-10);
            ASSERT_NEAR(stats.q_rev, q, 1e-10);
        }
    }
    auto rng = SplitMix64::stream(43, 99);
    const auto stats = estimate_noise_stats(random_symmetric_attack(0.0, rng));
    EXPECT_NEAR(stats.q_fwd, 0.0, 1e-12);
    EXPECT_NEAR(stats.q_rev, 0.0, 1e-12);
}

TEST(estimate_noise_stats, phase_only_attack_disturbs_x_only) {
    // Z-controlled ancilla rotation in reverse: no Z flips, but T and E get
    // entangled, which shows up as X errors.
    auto rng = SplitMix64::stream(44, 0);
    const ComplexMatrix w0 = ComplexMatrix::identity(2);
    const ComplexMatrix w1 = linalg::haar_random_unitary(2, rng);
    const ComplexMatrix c = linalg::tensor(linalg::projector(StateVector{1, 0}), w0) +
                            linalg::tensor(linalg::projector(StateVector{0, 1}), w1);
    const CollectiveAttack attack(ComplexMatrix::identity(4), c, 2);
    const auto stats = estimate_noise_stats(attack);
    EXPECT_NEAR(stats.q_fwd, 0.0, 1e-14);
    EXPECT_NEAR(stats.q_rev, 0.0, 1e-14);
    EXPECT_GT(stats.q_x, 1e-6);
    // Restricted and collective forms of the same attack report the same statistics.
    const auto restricted = estimate_noise_stats(derive_restricted_attack(attack));
    EXPECT_NEAR(restricted.q_x, stats.q_x, 1e-12);
}
