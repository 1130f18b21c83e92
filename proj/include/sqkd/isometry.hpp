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

#include <cstddef>
#include <span>

#include "sqkd/matrix.hpp"
#include "sqkd/tolerances.hpp"

namespace sqkd::linalg {

/// A unitary whose first k columns are `columns` (k <= dim), extended by an
/// orthonormal basis of their complement. Throws DomainError if the inputs
/// are not orthonormal within tol.orthonormal_input.
ComplexMatrix complete_isometry(std::span<const StateVector> columns, const Tolerances& tol = kDefaultTolerances);

struct PlacedColumn {
    std::size_t index;
    StateVector vector;
};

/// Like complete_isometry, but column `c.index` of the result is `c.vector`
/// for every placed column; the completion fills the remaining indices in
/// increasing order.
ComplexMatrix complete_isometry_at(std::size_t dim, std::span<const PlacedColumn> columns,
                                   const Tolerances& tol = kDefaultTolerances);

}  // namespace sqkd::linalg
