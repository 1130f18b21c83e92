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

namespace sqkd {

/// Every numerical tolerance used by the library, in one place.
struct Tolerances {
    // DensityOperator invariants.
    double hermitian = 1e-10;
    double trace = 1e-10;
    double min_eigenvalue = -1e-10;

    // StateVector normalization.
    double normalized = 1e-10;

    // hermitian_eigen accepts inputs this far from Hermitian.
    double eigen_input_hermitian = 1e-8;
    // Jacobi stops once the off-diagonal Frobenius mass drops below this
    // fraction of the total Frobenius norm.
    double jacobi_off_diagonal = 1e-14;
    int jacobi_max_sweeps = 100;

    // Eigenvalues below this are treated as zero inside entropies.
    double entropy_clamp = 1e-12;

    // Unitarity of attack operators and orthonormality of completed columns.
    double unitary = 1e-10;
    // complete_isometry rejects input columns further than this from
    // orthonormal.
    double orthonormal_input = 1e-8;

    // |eta| >= 1 - degenerate_eta selects the degenerate branch when a
    // restricted attack is derived from a collective one.
    double degenerate_eta = 1e-8;
    // Amplitudes below this leave their ancilla direction undefined.
    double negligible_amplitude = 1e-12;
    // Residual of the restricted-attack constraint.
    double restriction = 1e-10;

    // sigma = tau/2 + mu/2, entrywise.
    double decomposition = 1e-10;
};

inline constexpr Tolerances kDefaultTolerances{};

}  // namespace sqkd
