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

#include <span>
#include <vector>

#include "sqkd/layout.hpp"
#include "sqkd/matrix.hpp"
#include "sqkd/tolerances.hpp"

namespace sqkd::linalg {

enum class MeasurementBasis { Z, X };

/// Hermitian, positive semi-definite, unit-trace matrix together with the
/// tensor-factor layout it acts on.
///
/// The public constructor checks all three invariants (the PSD check costs
/// one eigendecomposition). The free functions below build their results
/// through maps that preserve the invariants and skip re-validation.
class DensityOperator {
 public:
    /// Throws DimensionError if the matrix does not match the layout and
    /// DomainError if an invariant fails.
    DensityOperator(ComplexMatrix matrix, SubsystemLayout layout, const Tolerances& tol = kDefaultTolerances);

    /// |psi><psi|; throws DomainError unless psi is normalized.
    static DensityOperator from_pure(const StateVector& psi, SubsystemLayout layout,
                                     const Tolerances& tol = kDefaultTolerances);

    const ComplexMatrix& matrix() const { return matrix_; }
    const SubsystemLayout& layout() const { return layout_; }
    std::size_t dim() const { return matrix_.rows(); }

 private:
    struct Trusted {};
    DensityOperator(Trusted, ComplexMatrix matrix, SubsystemLayout layout)
        : matrix_(std::move(matrix)), layout_(std::move(layout)) {}

    friend DensityOperator tensor(const DensityOperator&, const DensityOperator&);
    friend DensityOperator partial_trace(const DensityOperator&, std::span<const Register>);
    friend DensityOperator reorder(const DensityOperator&, std::span<const Register>);
    friend DensityOperator apply_unitary(const DensityOperator&, const ComplexMatrix&, std::span<const Register>,
                                         const Tolerances&);
    friend DensityOperator measure_register(const DensityOperator&, Register, MeasurementBasis);

    ComplexMatrix matrix_;
    SubsystemLayout layout_;
};

/// rho (x) sigma over the concatenated layout.
DensityOperator tensor(const DensityOperator& rho, const DensityOperator& sigma);

/// Reduced operator on `keep`, factors in their original order. `keep` must
/// be a nonempty set of labels present in the layout (LabelError otherwise).
DensityOperator partial_trace(const DensityOperator& rho, std::span<const Register> keep);
inline DensityOperator partial_trace(const DensityOperator& rho, std::initializer_list<Register> keep) {
    return partial_trace(rho, std::span<const Register>(keep.begin(), keep.size()));
}

/// Same state with its factors permuted into `order` (a permutation of all labels).
DensityOperator reorder(const DensityOperator& rho, std::span<const Register> order);
inline DensityOperator reorder(const DensityOperator& rho, std::initializer_list<Register> order) {
    return reorder(rho, std::span<const Register>(order.begin(), order.size()));
}

/// Full-space matrix acting as `op` on `targets` (tensor order as listed)
/// and as the identity on every other factor.
ComplexMatrix lift_operator(const ComplexMatrix& op, const SubsystemLayout& layout, std::span<const Register> targets);

/// W rho W* with W = lift_operator(u, ...). Throws DomainError if `u` is
/// not unitary within tol.unitary.
DensityOperator apply_unitary(const DensityOperator& rho, const ComplexMatrix& u, std::span<const Register> targets,
                              const Tolerances& tol = kDefaultTolerances);
inline DensityOperator apply_unitary(const DensityOperator& rho, const ComplexMatrix& u,
                                     std::initializer_list<Register> targets,
                                     const Tolerances& tol = kDefaultTolerances) {
    return apply_unitary(rho, u, std::span<const Register>(targets.begin(), targets.size()), tol);
}

/// Pinching of a qubit register in the Z or X basis: sum_k P_k rho P_k.
/// Throws DimensionError if the register is not two-dimensional.
DensityOperator measure_register(const DensityOperator& rho, Register label, MeasurementBasis basis);

/// Basis vectors |0>,|1> or |+>,|->.
StateVector basis_state(MeasurementBasis basis, int outcome);

}  // namespace sqkd::linalg
