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

#include "sqkd/density.hpp"

#include <algorithm>
#include <cmath>
#include <string>

#include "sqkd/errors.hpp"
#include "sqkd/spectral.hpp"

namespace sqkd::linalg {

namespace {

void require_layout_matches(const ComplexMatrix& m, const SubsystemLayout& layout) {
    if (!m.is_square() || m.rows() != layout.total_dim()) {
        throw DimensionError("DensityOperator: " + std::to_string(m.rows()) + "x" + std::to_string(m.cols()) +
                             " matrix for a layout of dimension " + std::to_string(layout.total_dim()));
    }
}

std::vector<std::size_t> positions_of(const SubsystemLayout& layout, std::span<const Register> labels) {
    std::vector<std::size_t> pos;
    pos.reserve(labels.size());
    for (Register r : labels) {
        const std::size_t p = layout.position(r);
        if (std::find(pos.begin(), pos.end(), p) != pos.end()) {
            throw LabelError("label " + std::string(to_string(r)) + " listed twice");
        }
        pos.push_back(p);
    }
    return pos;
}

}  // namespace

DensityOperator::DensityOperator(ComplexMatrix matrix, SubsystemLayout layout, const Tolerances& tol)
    : matrix_(std::move(matrix)), layout_(std::move(layout)) {
    require_layout_matches(matrix_, layout_);
    const double herm = matrix_.hermitian_residual();
    if (herm > tol.hermitian) {
        throw DomainError("DensityOperator: not Hermitian (residual " + std::to_string(herm) + ")");
    }
    const Complex tr = matrix_.trace();
    if (std::abs(tr - 1.0) > tol.trace) {
        throw DomainError("DensityOperator: trace " + std::to_string(tr.real()) + " != 1");
    }
    const auto eig = hermitian_eigen(matrix_, tol);
    if (eig.eigenvalues.back() < tol.min_eigenvalue) {
        throw DomainError("DensityOperator: negative eigenvalue " + std::to_string(eig.eigenvalues.back()));
    }
}

DensityOperator DensityOperator::from_pure(const StateVector& psi, SubsystemLayout layout, const Tolerances& tol) {
    if (psi.dim() != layout.total_dim()) {
        throw DimensionError("from_pure: vector of dimension " + std::to_string(psi.dim()) +
                             " for layout of dimension " + std::to_string(layout.total_dim()));
    }
    if (!psi.is_normalized(tol.normalized)) {
        throw DomainError("from_pure: state has norm " + std::to_string(psi.norm()));
    }
    return DensityOperator(Trusted{}, projector(psi), std::move(layout));
}

DensityOperator tensor(const DensityOperator& rho, const DensityOperator& sigma) {
    return DensityOperator(DensityOperator::Trusted{}, tensor(rho.matrix(), sigma.matrix()),
                           concat(rho.layout(), sigma.layout()));
}

DensityOperator partial_trace(const DensityOperator& rho, std::span<const Register> keep) {
    const auto& layout = rho.layout();
    if (keep.empty()) throw LabelError("partial_trace: empty keep set");
    const auto keep_pos = positions_of(layout, keep);

    std::vector<Factor> kept_factors;
    std::vector<Factor> traced_factors;
    std::vector<bool> is_kept(layout.size(), false);
    for (std::size_t p : keep_pos) is_kept[p] = true;
    for (std::size_t k = 0; k < layout.size(); ++k) {
        (is_kept[k] ? kept_factors : traced_factors).push_back(layout.factors()[k]);
    }
    const SubsystemLayout kept(std::move(kept_factors));
    const SubsystemLayout traced(std::move(traced_factors));

    // full_index[k * dt + t] for kept index k and traced index t.
    const std::size_t dk = kept.total_dim();
    const std::size_t dt = traced.total_dim();
    std::vector<std::size_t> full_index(dk * dt);
    for (std::size_t full = 0; full < layout.total_dim(); ++full) {
        const auto d = layout.digits(full);
        std::vector<std::size_t> dkeep, dtrace;
        for (std::size_t k = 0; k < d.size(); ++k) (is_kept[k] ? dkeep : dtrace).push_back(d[k]);
        full_index[kept.index(dkeep) * dt + traced.index(dtrace)] = full;
    }

    const auto& m = rho.matrix();
    ComplexMatrix out(dk, dk);
    for (std::size_t i = 0; i < dk; ++i)
        for (std::size_t j = 0; j < dk; ++j) {
            Complex s = 0.0;
            for (std::size_t t = 0; t < dt; ++t) s += m(full_index[i * dt + t], full_index[j * dt + t]);
            out(i, j) = s;
        }
    return DensityOperator(DensityOperator::Trusted{}, std::move(out), kept);
}

DensityOperator reorder(const DensityOperator& rho, std::span<const Register> order) {
    const auto& layout = rho.layout();
    if (order.size() != layout.size()) {
        throw LabelError("reorder: order lists " + std::to_string(order.size()) + " labels for " +
                         std::to_string(layout.size()) + " factors");
    }
    const auto pos = positions_of(layout, order);
    std::vector<Factor> factors;
    for (std::size_t p : pos) factors.push_back(layout.factors()[p]);
    const SubsystemLayout target(std::move(factors));

    const std::size_t n = layout.total_dim();
    std::vector<std::size_t> old_of_new(n);
    std::vector<std::size_t> old_digits(layout.size());
    for (std::size_t idx = 0; idx < n; ++idx) {
        const auto d = target.digits(idx);
        for (std::size_t k = 0; k < pos.size(); ++k) old_digits[pos[k]] = d[k];
        old_of_new[idx] = layout.index(old_digits);
    }
    ComplexMatrix out(n, n);
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j) out(i, j) = rho.matrix()(old_of_new[i], old_of_new[j]);
    return DensityOperator(DensityOperator::Trusted{}, std::move(out), target);
}

ComplexMatrix lift_operator(const ComplexMatrix& op, const SubsystemLayout& layout, std::span<const Register> targets) {
    const auto pos = positions_of(layout, targets);
    std::size_t target_dim = 1;
    for (std::size_t p : pos) target_dim *= layout.factors()[p].dim;
    if (!op.is_square() || op.rows() != target_dim) {
        throw DimensionError("lift_operator: operator of size " + std::to_string(op.rows()) + "x" +
                             std::to_string(op.cols()) + " for targets of dimension " + std::to_string(target_dim));
    }
    std::vector<bool> is_target(layout.size(), false);
    for (std::size_t p : pos) is_target[p] = true;

    const std::size_t n = layout.total_dim();
    std::vector<std::size_t> sub(n);   // index into op
    std::vector<std::size_t> rest(n);  // index over the untouched factors
    for (std::size_t full = 0; full < n; ++full) {
        const auto d = layout.digits(full);
        std::size_t s = 0;
        for (std::size_t p : pos) s = s * layout.factors()[p].dim + d[p];
        std::size_t r = 0;
        for (std::size_t k = 0; k < d.size(); ++k)
            if (!is_target[k]) r = r * layout.factors()[k].dim + d[k];
        sub[full] = s;
        rest[full] = r;
    }
    ComplexMatrix out(n, n);
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j)
            if (rest[i] == rest[j]) out(i, j) = op(sub[i], sub[j]);
    return out;
}

DensityOperator apply_unitary(const DensityOperator& rho, const ComplexMatrix& u, std::span<const Register> targets,
                              const Tolerances& tol) {
    const ComplexMatrix w = lift_operator(u, rho.layout(), targets);
    const double res = u.unitarity_residual();
    if (res > tol.unitary) {
        throw DomainError("apply_unitary: operator not unitary (residual " + std::to_string(res) + ")");
    }
    ComplexMatrix out = w * rho.matrix() * w.adjoint();
    return DensityOperator(DensityOperator::Trusted{}, std::move(out), rho.layout());
}

StateVector basis_state(MeasurementBasis basis, int outcome) {
    if (outcome != 0 && outcome != 1) throw DomainError("basis_state: outcome must be 0 or 1");
    if (basis == MeasurementBasis::Z) return StateVector::basis(2, static_cast<std::size_t>(outcome));
    const double r = 1.0 / std::sqrt(2.0);
    return outcome == 0 ? StateVector{r, r} : StateVector{r, -r};
}

DensityOperator measure_register(const DensityOperator& rho, Register label, MeasurementBasis basis) {
    const auto& layout = rho.layout();
    if (layout.dim_of(label) != 2) {
        throw DimensionError("measure_register: register " + std::string(to_string(label)) + " is not a qubit");
    }
    const Register targets[] = {label};
    ComplexMatrix out(rho.dim(), rho.dim());
    for (int k = 0; k < 2; ++k) {
        const ComplexMatrix p = lift_operator(projector(basis_state(basis, k)), layout, targets);
        out += p * rho.matrix() * p;
    }
    return DensityOperator(DensityOperator::Trusted{}, std::move(out), layout);
}

}  // namespace sqkd::linalg
