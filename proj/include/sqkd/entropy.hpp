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

#include <initializer_list>
#include <span>

#include "sqkd/density.hpp"

namespace sqkd::linalg {

/// h(x) = -x log2 x - (1-x) log2 (1-x), with 0 log 0 = 0. DomainError
/// outside [0, 1].
double binary_entropy(double x);

/// -sum lambda log2 lambda; eigenvalues below tol.entropy_clamp count as 0.
double von_neumann_entropy(const DensityOperator& rho, const Tolerances& tol = kDefaultTolerances);

/// S(ab) - S(b), on the reduced operator over a and b. `b` may be empty, in
/// which case this is S(a). LabelError for overlapping or unknown labels.
double conditional_entropy(const DensityOperator& rho, std::span<const Register> a, std::span<const Register> b,
                           const Tolerances& tol = kDefaultTolerances);
inline double conditional_entropy(const DensityOperator& rho, std::initializer_list<Register> a,
                                  std::initializer_list<Register> b, const Tolerances& tol = kDefaultTolerances) {
    return conditional_entropy(rho, std::span<const Register>(a.begin(), a.size()),
                               std::span<const Register>(b.begin(), b.size()), tol);
}

/// (1/2) ||r1 - r2||_1. DimensionError unless both act on the same space.
double trace_distance(const DensityOperator& r1, const DensityOperator& r2, const Tolerances& tol = kDefaultTolerances);

}  // namespace sqkd::linalg
