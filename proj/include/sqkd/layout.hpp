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
#include <initializer_list>
#include <span>
#include <string_view>
#include <vector>

namespace sqkd::linalg {

/// Names of the tensor factors that appear anywhere in the protocol family:
/// Alice's key register (A, or A1/A2 in the two-qubit variants), Bob's
/// private register (B), the travelling qubit (T) and Eve's ancilla (E).
enum class Register { A, A1, A2, B, T, E };

std::string_view to_string(Register r);

struct Factor {
    Register label;
    std::size_t dim;

    friend bool operator==(const Factor&, const Factor&) = default;
};

/// Ordered tensor factors. The first factor is the most significant digit
/// of a basis index, matching the Kronecker product convention.
class SubsystemLayout {
 public:
    SubsystemLayout() = default;
    /// Throws LabelError on duplicate labels, DimensionError on a zero dimension.
    explicit SubsystemLayout(std::vector<Factor> factors);
    SubsystemLayout(std::initializer_list<Factor> factors);

    std::span<const Factor> factors() const { return factors_; }
    std::size_t size() const { return factors_.size(); }
    std::size_t total_dim() const;

    bool contains(Register label) const;
    /// Position of `label`; throws LabelError if absent.
    std::size_t position(Register label) const;
    std::size_t dim_of(Register label) const { return factors_[position(label)].dim; }

    /// Digits of a basis index, one per factor.
    std::vector<std::size_t> digits(std::size_t index) const;
    std::size_t index(std::span<const std::size_t> digits) const;

    friend bool operator==(const SubsystemLayout&, const SubsystemLayout&) = default;

 private:
    std::vector<Factor> factors_;
};

/// Concatenation; labels must stay unique.
SubsystemLayout concat(const SubsystemLayout& a, const SubsystemLayout& b);

}  // namespace sqkd::linalg
