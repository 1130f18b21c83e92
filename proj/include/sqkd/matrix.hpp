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

#include <complex>
#include <cstddef>
#include <initializer_list>
#include <span>
#include <vector>

namespace sqkd::linalg {

using Complex = std::complex<double>;

class StateVector;

/// Dense complex matrix, row-major.
class ComplexMatrix {
 public:
    ComplexMatrix() = default;
    ComplexMatrix(std::size_t rows, std::size_t cols);
    /// Throws DimensionError unless entries.size() == rows * cols.
    ComplexMatrix(std::size_t rows, std::size_t cols, std::vector<Complex> entries);
    /// Row-major nested initializer; every row must have the same length.
    ComplexMatrix(std::initializer_list<std::initializer_list<Complex>> rows);

    static ComplexMatrix identity(std::size_t n);
    static ComplexMatrix diagonal(std::span<const double> values);
    /// Matrix whose columns are the given vectors (all of the same dimension).
    static ComplexMatrix from_columns(std::span<const StateVector> columns);

    std::size_t rows() const { return rows_; }
    std::size_t cols() const { return cols_; }
    bool is_square() const { return rows_ == cols_; }

    Complex& operator()(std::size_t r, std::size_t c) { return entries_[r * cols_ + c]; }
    const Complex& operator()(std::size_t r, std::size_t c) const { return entries_[r * cols_ + c]; }
    std::span<const Complex> entries() const { return entries_; }

    StateVector column(std::size_t c) const;
    void set_column(std::size_t c, const StateVector& v);

    ComplexMatrix adjoint() const;
    Complex trace() const;

    /// Largest entrywise modulus.
    double max_abs() const;
    double frobenius_norm() const;
    /// max |m_ij - conj(m_ji)|; +inf for non-square matrices.
    double hermitian_residual() const;
    /// max |(W*W - I)_ij|: zero for an isometry (and for a unitary if square).
    double isometry_residual() const;
    /// Residual of both W*W = I and W W* = I; requires a square matrix.
    double unitarity_residual() const;

    ComplexMatrix& operator+=(const ComplexMatrix& other);
    ComplexMatrix& operator-=(const ComplexMatrix& other);
    ComplexMatrix& operator*=(Complex scale);

    friend ComplexMatrix operator+(ComplexMatrix a, const ComplexMatrix& b) { return a += b; }
    friend ComplexMatrix operator-(ComplexMatrix a, const ComplexMatrix& b) { return a -= b; }
    friend ComplexMatrix operator*(ComplexMatrix a, Complex s) { return a *= s; }
    friend ComplexMatrix operator*(Complex s, ComplexMatrix a) { return a *= s; }
    friend ComplexMatrix operator*(const ComplexMatrix& a, const ComplexMatrix& b);
    friend StateVector operator*(const ComplexMatrix& a, const StateVector& v);

    friend bool operator==(const ComplexMatrix&, const ComplexMatrix&) = default;

 private:
    std::size_t rows_ = 0;
    std::size_t cols_ = 0;
    std::vector<Complex> entries_;
};

/// Column vector of amplitudes.
class StateVector {
 public:
    StateVector() = default;
    explicit StateVector(std::size_t dim);
    explicit StateVector(std::vector<Complex> amplitudes);
    StateVector(std::initializer_list<Complex> amplitudes);

    /// Computational basis vector |index> in dimension dim.
    static StateVector basis(std::size_t dim, std::size_t index);

    std::size_t dim() const { return amplitudes_.size(); }
    Complex& operator[](std::size_t i) { return amplitudes_[i]; }
    const Complex& operator[](std::size_t i) const { return amplitudes_[i]; }
    std::span<const Complex> amplitudes() const { return amplitudes_; }

    double norm() const;
    double norm_squared() const;
    /// Copy scaled to unit norm; throws DomainError for the zero vector.
    StateVector normalized() const;
    bool is_normalized(double tol) const;

    StateVector& operator+=(const StateVector& other);
    StateVector& operator-=(const StateVector& other);
    StateVector& operator*=(Complex scale);

    friend StateVector operator+(StateVector a, const StateVector& b) { return a += b; }
    friend StateVector operator-(StateVector a, const StateVector& b) { return a -= b; }
    friend StateVector operator*(StateVector a, Complex s) { return a *= s; }
    friend StateVector operator*(Complex s, StateVector a) { return a *= s; }

    friend bool operator==(const StateVector&, const StateVector&) = default;

 private:
    std::vector<Complex> amplitudes_;
};

/// <a|b>, antilinear in the first argument.
Complex inner(const StateVector& a, const StateVector& b);

/// |a><b|.
ComplexMatrix outer(const StateVector& a, const StateVector& b);

/// |v><v|.
inline ComplexMatrix projector(const StateVector& v) { return outer(v, v); }

/// Kronecker product.
ComplexMatrix tensor(const ComplexMatrix& a, const ComplexMatrix& b);
StateVector tensor(const StateVector& a, const StateVector& b);

}  // namespace sqkd::linalg
