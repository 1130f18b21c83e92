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

#include "sqkd/random.hpp"

#include <gtest/gtest.h>

#include <random>

#include "test_util.hpp"

using namespace sqkd::linalg;

TEST(split_mix64, reference_outputs) {
    // Published reference sequence for seed 0.
    SplitMix64 rng(0);
    EXPECT_EQ(rng(), 0xE220A8397B1DCDAFULL);
    EXPECT_EQ(rng(), 0x6E789E6AA1B965F4ULL);
    EXPECT_EQ(rng(), 0x06C45D188009454FULL);
}

TEST(split_mix64, streams_are_reproducible_and_distinct) {
    auto a = SplitMix64::stream(42, 7);
    auto b = SplitMix64::stream(42, 7);
    auto c = SplitMix64::stream(42, 8);
    auto d = SplitMix64::stream(43, 7);
    const auto x = a();
    EXPECT_EQ(x, b());
    EXPECT_NE(x, c());
    EXPECT_NE(x, d());
}

TEST(split_mix64, works_with_standard_distributions) {
    SplitMix64 rng(1);
    std::uniform_int_distribution<int> dist(0, 9);
    for (int i = 0; i < 100; ++i) {
        const int v = dist(rng);
        ASSERT_GE(v, 0);
        ASSERT_LE(v, 9);
    }
}

TEST(split_mix64, sample_moments) {
    SplitMix64 rng(99);
    constexpr int n = 200000;
    double su = 0, sg = 0, sg2 = 0, sd = 0;
    for (int i = 0; i < n; ++i) {
        const double u = rng.uniform();
        ASSERT_GE(u, 0.0);
        ASSERT_LT(u, 1.0);
        su += u;
        const double g = rng.gaussian();
        sg += g;
        sg2 += g * g;
        const Complex z = rng.uniform_disc(0.5);
        ASSERT_LE(std::abs(z), 0.5);
        sd += std::norm(z);
    }
    EXPECT_NEAR(su / n, 0.5, 5e-3);
    EXPECT_NEAR(sg / n, 0.0, 1e-2);
    EXPECT_NEAR(sg2 / n, 1.0, 1e-2);
    // E|z|^2 = r^2 / 2 for the uniform disc.
    EXPECT_NEAR(sd / n, 0.125, 2e-3);
}

TEST(haar_random_unitary, is_unitary) {
    SplitMix64 rng(3);
    for (std::size_t dim = 1; dim <= 16; ++dim) {
        EXPECT_LE(haar_random_unitary(dim, rng).unitarity_residual(), 1e-12) << dim;
    }
}

TEST(haar_random_unitary, entry_statistics) {
    constexpr int samples = 10000;
    for (std::size_t dim : {2u, 4u, 6u}) {
        SplitMix64 rng(1000 + dim);
        double second = 0.0, fourth = 0.0;
        for (int s = 0; s < samples; ++s) {
            const ComplexMatrix u = haar_random_unitary(dim, rng);
            const double p = std::norm(u(0, 0));
            second += p;
            fourth += p * p;
        }
        const double d = static_cast<double>(dim);
        // |U_00|^2 ~ Beta(1, d-1): mean 1/d, second moment 2/(d(d+1)).
        EXPECT_NEAR(second / samples, 1.0 / d, 0.05 / d) << dim;
        EXPECT_NEAR(fourth / samples, 2.0 / (d * (d + 1)), 0.1 * 2.0 / (d * (d + 1))) << dim;
    }
}
