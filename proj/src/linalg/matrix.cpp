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

#include "sqkd/matrix.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <string>

#include "sqkd/errors.hpp"

namespace sqkd::linalg {

namespace {

void require_same_shape(const ComplexMatrix& a, const ComplexMatrix& b, const char* what) {
    if (a.rows() != b.rows() || a.cols() != b.cols()) {
        throw DimensionError(std::string(what) + ": shape mismatch " + std::to_string(a.rows()) + "x" +
                             std::to_string(a.cols()) + " vs " + std::to_string(b.rows()) + "x" +
                             std::to_string(b.cols()));
    }
}

}  // namespace

ComplexMatrix::ComplexMatrix(std::size_t rows, std::size_t cols) : rows_(rows), cols_(cols), entries_(rows * cols) {}

ComplexMatrix::ComplexMatrix(std::size_t rows, std::size_t cols, std::vector<Complex> entries)
    : rows_(rows), cols_(cols), entries_(std::move(entries)) {
    if (entries_.size() != rows_ * cols_) {
        throw DimensionError("ComplexMatrix: " + std::to_string(entries_.size()) + " entries for a " +
                             std::to_string(rows_) + "x" + std::to_string(cols_) + " matrix");
    }
}

ComplexMatrix::ComplexMatrix(std::initializer_list<std::initializer_list<Complex>> rows) {
    rows_ = rows.size();
    cols_ = rows_ == 0 ? 0 : rows.begin()->size();
    entries_.reserve(rows_ * cols_);
    for (const auto& row : rows) {
        if (row.size() != cols_) {
            throw DimensionError("ComplexMatrix: ragged initializer");
        }
        entries_.insert(entries_.end(), row.begin(), row.end());
    }
}

ComplexMatrix ComplexMatrix::identity(std::size_t n) {
    ComplexMatrix m(n, n);
    for (std::size_t i = 0; i < n; ++i) m(i, i) = 1.0;
    return m;
}

ComplexMatrix ComplexMatrix::diagonal(std::span<const double> values) {
    ComplexMatrix m(values.size(), values.size());
    for (std::size_t i = 0; i < values.size(); ++i) m(i, i) = values[i];
    return m;
}

ComplexMatrix ComplexMatrix::from_columns(std::span<const StateVector> columns) {
    if (columns.empty()) return {};
    ComplexMatrix m(columns.front().dim(), columns.size());
    for (std::size_t c = 0; c < columns.size(); ++c) m.set_column(c, columns[c]);
    return m;
}

StateVector ComplexMatrix::column(std::size_t c) const {
    StateVector v(rows_);
    for (std::size_t r = 0; r < rows_; ++r) v[r] = (*this)(r, c);
    return v;
}

void ComplexMatrix::set_column(std::size_t c, const StateVector& v) {
    if (v.dim() != rows_) {
        throw DimensionError("set_column: vector of dimension " + std::to_string(v.dim()) + " for " +
                             std::to_string(rows_) + " rows");
    }
    for (std::size_t r = 0; r < rows_; ++r) (*this)(r, c) = v[r];
}

ComplexMatrix ComplexMatrix::adjoint() const {
    ComplexMatrix out(cols_, rows_);
    for (std::size_t r = 0; r < rows_; ++r)
        for (std::size_t c = 0; c < cols_; ++c) out(c, r) = std::conj((*this)(r, c));
    return out;
}

Complex ComplexMatrix::trace() const {
    Complex t = 0.0;
    for (std::size_t i = 0; i < std::min(rows_, cols_); ++i) t += (*this)(i, i);
    return t;
}

double ComplexMatrix::max_abs() const {
    double m = 0.0;
    for (const auto& z : entries_) m = std::max(m, std::abs(z));
    return m;
}

double ComplexMatrix::frobenius_norm() const {
    double s = 0.0;
    for (const auto& z : entries_) s += std::norm(z);
    return std::sqrt(s);
}

double ComplexMatrix::hermitian_residual() const {
    if (!is_square()) return std::numeric_limits<double>::infinity();
    double m = 0.0;
    for (std::size_t r = 0; r < rows_; ++r)
        for (std::size_t c = r; c < cols_; ++c) m = std::max(m, std::abs((*this)(r, c) - std::conj((*this)(c, r))));
    return m;
}

double ComplexMatrix::isometry_residual() const { return (adjoint() * (*this) - identity(cols_)).max_abs(); }

double ComplexMatrix::unitarity_residual() const {
    if (!is_square()) return std::numeric_limits<double>::infinity();
    return std::max(isometry_residual(), ((*this) * adjoint() - identity(rows_)).max_abs());
}

ComplexMatrix& ComplexMatrix::operator+=(const ComplexMatrix& other) {
    require_same_shape(*this, other, "operator+");
    for (std::size_t i = 0; i < entries_.size(); ++i) entries_[i] += other.entries_[i];
    return *this;
}

ComplexMatrix& ComplexMatrix::operator-=(const ComplexMatrix& other) {
    require_same_shape(*this, other, "operator-");
    for (std::size_t i = 0; i < entries_.size(); ++i) entries_[i] -= other.entries_[i];
    return *this;
}

ComplexMatrix& ComplexMatrix::operator*=(Complex scale) {
    for (auto& z : entries_) z *= scale;
    return *this;
}

ComplexMatrix operator*(const ComplexMatrix& a, const ComplexMatrix& b) {
    if (a.cols_ != b.rows_) {
        throw DimensionError("operator*: inner dimensions " + std::to_string(a.cols_) + " and " +
                             std::to_string(b.rows_));
    }
    ComplexMatrix out(a.rows_, b.cols_);
    for (std::size_t r = 0; r < a.rows_; ++r) {
        for (std::size_t k = 0; k < a.cols_; ++k) {
            const Complex s = a(r, k);
            if (s == Complex{}) continue;
            for (std::size_t c = 0; c < b.cols_; ++c) out(r, c) += s * b(k, c);
        }
    }
    return out;
}

StateVector operator*(const ComplexMatrix& a, const StateVector& v) {
    if (a.cols_ != v.dim()) {
        throw DimensionError("operator*: matrix with " + std::to_string(a.cols_) +
                             " columns applied to vector of dimension " + std::to_string(v.dim()));
    }
    StateVector out(a.rows_);
    for (std::size_t r = 0; r < a.rows_; ++r) {
        Complex s = 0.0;
        for (std::size_t c = 0; c < a.cols_; ++c) s += a(r, c) * v[c];
        out[r] = s;
    }
    return out;
}

StateVector::StateVector(std::size_t dim) : amplitudes_(dim) {}

StateVector::StateVector(std::vector<Complex> amplitudes) : amplitudes_(std::move(amplitudes)) {}

StateVector::StateVector(std::initializer_list<Complex> amplitudes) : amplitudes_(amplitudes) {}

StateVector StateVector::basis(std::size_t dim, std::size_t index) {
    if (index >= dim) {
        throw DimensionError("basis: index " + std::to_string(index) + " out of range for dimension " +
                             std::to_string(dim));
    }
    StateVector v(dim);
    v[index] = 1.0;
    return v;
}

double StateVector::norm_squared() const {
    double s = 0.0;
    for (const auto& z : amplitudes_) s += std::norm(z);
    return s;
}

double StateVector::norm() const { return std::sqrt(norm_squared()); }

StateVector StateVector::normalized() const {
    const double n = norm();
    if (n == 0.0) throw DomainError("normalized: zero vector");
    return (*this) * Complex(1.0 / n);
}

bool StateVector::is_normalized(double tol) const { return std::abs(norm() - 1.0) <= tol; }

StateVector& StateVector::operator+=(const StateVector& other) {
    if (other.dim() != dim()) throw DimensionError("StateVector +: dimension mismatch");
    for (std::size_t i = 0; i < dim(); ++i) amplitudes_[i] += other[i];
    return *this;
}

StateVector& StateVector::operator-=(const StateVector& other) {
    if (other.dim() != dim()) throw DimensionError("StateVector -: dimension mismatch");
    for (std::size_t i = 0; i < dim(); ++i) amplitudes_[i] -= other[i];
    return *this;
}

StateVector& StateVector::operator*=(Complex scale) {
    for (auto& z : amplitudes_) z *= scale;
    return *this;
}

Complex inner(const StateVector& a, const StateVector& b) {
    if (a.dim() != b.dim()) throw DimensionError("inner: dimension mismatch");
    Complex s = 0.0;
    for (std::size_t i = 0; i < a.dim(); ++i) s += std::conj(a[i]) * b[i];
    return s;
}

ComplexMatrix outer(const StateVector& a, const StateVector& b) {
    ComplexMatrix m(a.dim(), b.dim());
    for (std::size_t r = 0; r < a.dim(); ++r)
        for (std::size_t c = 0; c < b.dim(); ++c) m(r, c) = a[r] * std::conj(b[c]);
    return m;
}

ComplexMatrix tensor(const ComplexMatrix& a, const ComplexMatrix& b) {
    ComplexMatrix out(a.rows() * b.rows(), a.cols() * b.cols());
    for (std::size_t ar = 0; ar < a.rows(); ++ar)
        for (std::size_t ac = 0; ac < a.cols(); ++ac) {
            const Complex s = a(ar, ac);
            if (s == Complex{}) continue;
            for (std::size_t br = 0; br < b.rows(); ++br)
                for (std::size_t bc = 0; bc < b.cols(); ++bc)
                    out(ar * b.rows() + br, ac * b.cols() + bc) = s * b(br, bc);
        }
    return out;
}

StateVector tensor(const StateVector& a, const StateVector& b) {
    StateVector out(a.dim() * b.dim());
    for (std::size_t i = 0; i < a.dim(); ++i)
        for (std::size_t j = 0; j < b.dim(); ++j) out[i * b.dim() + j] = a[i] * b[j];
    return out;
}

}  // namespace sqkd::linalg
