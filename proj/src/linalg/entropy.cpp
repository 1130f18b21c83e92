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

#include "sqkd/entropy.hpp"

#include <algorithm>
#include <cmath>
#include <string>
#include <vector>

#include "sqkd/errors.hpp"
#include "sqkd/spectral.hpp"

namespace sqkd::linalg {

double binary_entropy(double x) {
    if (!(x >= 0.0 && x <= 1.0)) throw DomainError("binary_entropy: argument " + std::to_string(x) + " not in [0, 1]");
    if (x == 0.0 || x == 1.0) return 0.0;
    return -x * std::log2(x) - (1.0 - x) * std::log2(1.0 - x);
}

double von_neumann_entropy(const DensityOperator& rho, const Tolerances& tol) {
    double s = 0.0;
    for (double lambda : hermitian_eigen(rho.matrix(), tol).eigenvalues) {
        if (lambda < tol.entropy_clamp) continue;
        s -= lambda * std::log2(lambda);
    }
    return s;
}

double conditional_entropy(const DensityOperator& rho, std::span<const Register> a, std::span<const Register> b,
                           const Tolerances& tol) {
    if (a.empty()) throw LabelError("conditional_entropy: empty system");
    for (Register x : a) {
        if (std::find(b.begin(), b.end(), x) != b.end()) {
            throw LabelError("conditional_entropy: label " + std::string(to_string(x)) + " on both sides");
        }
    }
    std::vector<Register> joint(a.begin(), a.end());
    joint.insert(joint.end(), b.begin(), b.end());
    const double s_joint = von_neumann_entropy(partial_trace(rho, joint), tol);
    if (b.empty()) return s_joint;
    return s_joint - von_neumann_entropy(partial_trace(rho, b), tol);
}

double trace_distance(const DensityOperator& r1, const DensityOperator& r2, const Tolerances& tol) {
    if (r1.dim() != r2.dim()) {
        throw DimensionError("trace_distance: dimensions " + std::to_string(r1.dim()) + " and " +
                             std::to_string(r2.dim()));
    }
    return 0.5 * trace_norm(r1.matrix() - r2.matrix(), tol);
}

}  // namespace sqkd::linalg
