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

#include <stdexcept>
#include <string>

namespace sqkd {

/// Unknown, duplicated or overlapping subsystem labels.
class LabelError : public std::invalid_argument {
 public:
    using std::invalid_argument::invalid_argument;
};

/// Input outside the mathematical domain of an operation (non-Hermitian
/// matrix, probability out of range, violated attack constraint, ...).
class DomainError : public std::domain_error {
 public:
    using std::domain_error::domain_error;
};

/// Dimension mismatch between operands.
class DimensionError : public std::invalid_argument {
 public:
    using std::invalid_argument::invalid_argument;
};

/// An iterative routine failed to converge or produced values outside the
/// range its construction guarantees.
class NumericalError : public std::runtime_error {
 public:
    using std::runtime_error::runtime_error;
};

/// A derived identity that must hold by construction did not hold.
class ConsistencyError : public std::logic_error {
 public:
    using std::logic_error::logic_error;
};

/// A root search found no sign change in its interval.
class ThresholdAtBoundary : public std::runtime_error {
 public:
    using std::runtime_error::runtime_error;
};

}  // namespace sqkd
