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
#include <limits>

#include "sqkd/matrix.hpp"

namespace sqkd::linalg {

/// SplitMix64: a 64-bit counter-based generator. The n-th output is a fixed
/// bit mix of seed + n * 0x9E3779B97F4A7C15, so streams reproduce exactly on
/// every platform. Satisfies UniformRandomBitGenerator.
class SplitMix64 {
 public:
    using result_type = std::uint64_t;

    explicit SplitMix64(std::uint64_t seed) : state_(seed) {}

    /// Independent stream for (seed, index), e.g. one per verification trial.
    static SplitMix64 stream(std::uint64_t seed, std::uint64_t index);

    static constexpr result_type min() { return 0; }
    static constexpr result_type max() { return std::numeric_limits<result_type>::max(); }

    result_type operator()();

    /// Uniform on [0, 1) with 53 random bits.
    double uniform();
    /// Standard normal via Box-Muller. Each call consumes two outputs.
    double gaussian();
    /// (N(0,1) + i N(0,1)) / sqrt(2).
    Complex complex_gaussian();
    /// Uniform on the closed disc of the given radius.
    Complex uniform_disc(double radius = 1.0);

 private:
    std::uint64_t state_;
};

/// The SplitMix64 output function applied to a single word.
std::uint64_t mix64(std::uint64_t z);

/// Haar-distributed dim x dim unitary: Gram-Schmidt QR of a complex
/// Gaussian matrix (the R diagonal is positive by construction, which is the
/// phase normalization the Haar measure needs).
ComplexMatrix haar_random_unitary(std::size_t dim, SplitMix64& rng);

}  // namespace sqkd::linalg
