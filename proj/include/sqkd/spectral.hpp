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

#include <utility>
#include <vector>

#include "sqkd/matrix.hpp"
#include "sqkd/tolerances.hpp"

namespace sqkd::linalg {

struct EigenDecomposition {
    /// Descending.
    std::vector<double> eigenvalues;
    /// Column k is the unit eigenvector for eigenvalues[k].
    ComplexMatrix eigenvectors;
};

/// Eigendecomposition of a Hermitian matrix by cyclic complex Jacobi
/// rotations. Throws DomainError if `m` is not Hermitian within
/// `tol.eigen_input_hermitian`, NumericalError if the sweep limit is hit.
EigenDecomposition hermitian_eigen(const ComplexMatrix& m, const Tolerances& tol = kDefaultTolerances);

/// Sum of absolute eigenvalues of a Hermitian matrix.
double trace_norm(const ComplexMatrix& m, const Tolerances& tol = kDefaultTolerances);

/// The two possibly nonzero eigenvalues of |v0><v1| + |v1><v0| in closed
/// form, a + r and a - r with <v0|v1> = a + ib and r = sqrt(|v0|^2 |v1|^2 - b^2).
/// Every other eigenvalue is zero.
std::pair<double, double> pair_sum_eigenvalues(const StateVector& v0, const StateVector& v1);

}  // namespace sqkd::linalg
