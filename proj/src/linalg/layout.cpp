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

#include "sqkd/layout.hpp"

#include <algorithm>
#include <string>

#include "sqkd/errors.hpp"

namespace sqkd::linalg {

std::string_view to_string(Register r) {
    switch (r) {
        case Register::A:
            return "A";
        case Register::A1:
            return "A1";
        case Register::A2:
            return "A2";
        case Register::B:
            return "B";
        case Register::T:
            return "T";
        case Register::E:
            return "E";
    }
    return "?";
}

SubsystemLayout::SubsystemLayout(std::vector<Factor> factors) : factors_(std::move(factors)) {
    for (std::size_t i = 0; i < factors_.size(); ++i) {
        if (factors_[i].dim == 0) {
            throw DimensionError("SubsystemLayout: factor " + std::string(to_string(factors_[i].label)) +
                                 " has dimension 0");
        }
        for (std::size_t j = 0; j < i; ++j) {
            if (factors_[j].label == factors_[i].label) {
                throw LabelError("SubsystemLayout: duplicate label " + std::string(to_string(factors_[i].label)));
            }
        }
    }
}

SubsystemLayout::SubsystemLayout(std::initializer_list<Factor> factors)
    : SubsystemLayout(std::vector<Factor>(factors)) {}

std::size_t SubsystemLayout::total_dim() const {
    std::size_t d = 1;
    for (const auto& f : factors_) d *= f.dim;
    return d;
}

bool SubsystemLayout::contains(Register label) const {
    return std::any_of(factors_.begin(), factors_.end(), [&](const Factor& f) { return f.label == label; });
}

std::size_t SubsystemLayout::position(Register label) const {
    for (std::size_t i = 0; i < factors_.size(); ++i)
        if (factors_[i].label == label) return i;
    throw LabelError("SubsystemLayout: no factor labelled " + std::string(to_string(label)));
}

std::vector<std::size_t> SubsystemLayout::digits(std::size_t index) const {
    std::vector<std::size_t> out(factors_.size());
    for (std::size_t k = factors_.size(); k-- > 0;) {
        out[k] = index % factors_[k].dim;
        index /= factors_[k].dim;
    }
    return out;
}

std::size_t SubsystemLayout::index(std::span<const std::size_t> digits) const {
    std::size_t idx = 0;
    for (std::size_t k = 0; k < factors_.size(); ++k) idx = idx * factors_[k].dim + digits[k];
    return idx;
}

SubsystemLayout concat(const SubsystemLayout& a, const SubsystemLayout& b) {
    std::vector<Factor> f(a.factors().begin(), a.factors().end());
    f.insert(f.end(), b.factors().begin(), b.factors().end());
    return SubsystemLayout(std::move(f));
}

}  // namespace sqkd::linalg
