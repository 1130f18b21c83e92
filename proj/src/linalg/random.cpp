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

#include <cmath>
#include <numbers>

namespace sqkd::linalg {

namespace {

constexpr std::uint64_t kGolden = 0x9E3779B97F4A7C15ULL;

// Modified Gram-Schmidt with one re-orthogonalization pass.
void orthonormalize_columns(ComplexMatrix& m) {
    const std::size_t n = m.rows();
    for (std::size_t j = 0; j < m.cols(); ++j) {
        StateVector v = m.column(j);
        for (int pass = 0; pass < 2; ++pass)
            for (std::size_t k = 0; k < j; ++k) {
                const StateVector q = m.column(k);
                v -= q * inner(q, v);
            }
        v = v.normalized();
        for (std::size_t r = 0; r < n; ++r) m(r, j) = v[r];
    }
}

}  // namespace

std::uint64_t mix64(std::uint64_t z) {
    z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ULL;
    z = (z ^ (z >> 27)) * 0x94D049BB133111EBULL;
    return z ^ (z >> 31);
}

SplitMix64 SplitMix64::stream(std::uint64_t seed, std::uint64_t index) {
    return SplitMix64(mix64(seed ^ mix64(index + kGolden)));
}

SplitMix64::result_type SplitMix64::operator()() {
    state_ += kGolden;
    return mix64(state_);
}

double SplitMix64::uniform() { return static_cast<double>((*this)() >> 11) * 0x1.0p-53; }

double SplitMix64::gaussian() {
    // 1 - uniform() lies in (0, 1], keeping the log finite.
    const double u1 = 1.0 - uniform();
    const double u2 = uniform();
    return std::sqrt(-2.0 * std::log(u1)) * std::cos(2.0 * std::numbers::pi * u2);
}

Complex SplitMix64::complex_gaussian() {
    const double re = gaussian();
    const double im = gaussian();
    return Complex(re, im) * (1.0 / std::numbers::sqrt2);
}

Complex SplitMix64::uniform_disc(double radius) {
    const double r = radius * std::sqrt(uniform());
    const double phi = 2.0 * std::numbers::pi * uniform();
    return std::polar(r, phi);
}

ComplexMatrix haar_random_unitary(std::size_t dim, SplitMix64& rng) {
    ComplexMatrix z(dim, dim);
    for (std::size_t r = 0; r < dim; ++r)
        for (std::size_t c = 0; c < dim; ++c) z(r, c) = rng.complex_gaussian();
    orthonormalize_columns(z);
    return z;
}

}  // namespace sqkd::linalg
