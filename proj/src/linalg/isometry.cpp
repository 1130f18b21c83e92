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

#include "sqkd/isometry.hpp"

#include <algorithm>
#include <cmath>
#include <string>
#include <vector>

#include "sqkd/errors.hpp"

namespace sqkd::linalg {

namespace {

void require_orthonormal(std::span<const StateVector> columns, std::size_t dim, const Tolerances& tol) {
    for (std::size_t i = 0; i < columns.size(); ++i) {
        if (columns[i].dim() != dim) throw DimensionError("complete_isometry: columns differ in dimension");
        for (std::size_t j = 0; j <= i; ++j) {
            const double target = i == j ? 1.0 : 0.0;
            const double dev = std::abs(inner(columns[j], columns[i]) - target);
            if (dev > tol.orthonormal_input) {
                throw DomainError("complete_isometry: columns " + std::to_string(j) + " and " + std::to_string(i) +
                                  " deviate from orthonormal by " + std::to_string(dev));
            }
        }
    }
}

}  // namespace

ComplexMatrix complete_isometry(std::span<const StateVector> columns, const Tolerances& tol) {
    if (columns.empty()) throw DimensionError("complete_isometry: no columns (dimension unknown)");
    const std::size_t n = columns.front().dim();
    if (columns.size() > n) throw DimensionError("complete_isometry: more columns than dimensions");
    require_orthonormal(columns, n, tol);

    std::vector<StateVector> basis(columns.begin(), columns.end());
    while (basis.size() < n) {
        // The standard basis vector with the largest component outside the
        // current span; its residual norm is at least sqrt((n - k) / n).
        std::size_t best = 0;
        double best_residual = -1.0;
        for (std::size_t j = 0; j < n; ++j) {
            double captured = 0.0;
            for (const auto& b : basis) captured += std::norm(b[j]);
            if (1.0 - captured > best_residual) {
                best_residual = 1.0 - captured;
                best = j;
            }
        }
        StateVector v = StateVector::basis(n, best);
        for (int pass = 0; pass < 2; ++pass)
            for (const auto& b : basis) v -= b * inner(b, v);
        basis.push_back(v.normalized());
    }
    return ComplexMatrix::from_columns(basis);
}

ComplexMatrix complete_isometry_at(std::size_t dim, std::span<const PlacedColumn> columns, const Tolerances& tol) {
    std::vector<StateVector> vectors;
    std::vector<bool> taken(dim, false);
    for (const auto& c : columns) {
        if (c.index >= dim || taken[c.index]) {
            throw DimensionError("complete_isometry_at: bad or repeated column index " + std::to_string(c.index));
        }
        taken[c.index] = true;
        vectors.push_back(c.vector);
    }
    const ComplexMatrix full = vectors.empty() ? ComplexMatrix::identity(dim) : complete_isometry(vectors, tol);
    if (full.rows() != dim) throw DimensionError("complete_isometry_at: column dimension differs from dim");

    ComplexMatrix out(dim, dim);
    for (std::size_t k = 0; k < columns.size(); ++k) out.set_column(columns[k].index, full.column(k));
    std::size_t next = columns.size();
    for (std::size_t idx = 0; idx < dim; ++idx)
        if (!taken[idx]) out.set_column(idx, full.column(next++));
    return out;
}

}  // namespace sqkd::linalg
