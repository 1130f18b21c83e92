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

#include "sqkd/spectral.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <string>

#include "sqkd/errors.hpp"

namespace sqkd::linalg {

namespace {

double off_diagonal_mass(const ComplexMatrix& a) {
    double s = 0.0;
    for (std::size_t r = 0; r < a.rows(); ++r)
        for (std::size_t c = 0; c < a.cols(); ++c)
            if (r != c) s += std::norm(a(r, c));
    return std::sqrt(s);
}

// Zeroes a(p, q) with the unitary D J, where D = diag(.., e^{-i arg a_pq} at q, ..)
// makes the pivot real and J is the real Jacobi rotation on (p, q).
void rotate(ComplexMatrix& a, ComplexMatrix& w, std::size_t p, std::size_t q) {
    const std::size_t n = a.rows();
    const Complex apq = a(p, q);
    const double mag = std::abs(apq);
    if (mag == 0.0) return;

    const Complex phase = std::conj(apq) / mag;
    for (std::size_t r = 0; r < n; ++r) {
        a(r, q) *= phase;
        w(r, q) *= phase;
    }
    for (std::size_t c = 0; c < n; ++c) a(q, c) *= std::conj(phase);

    const double app = a(p, p).real();
    const double aqq = a(q, q).real();
    const double theta = (aqq - app) / (2.0 * mag);
    const double t = (theta >= 0.0 ? 1.0 : -1.0) / (std::abs(theta) + std::sqrt(theta * theta + 1.0));
    const double c = 1.0 / std::sqrt(t * t + 1.0);
    const double s = t * c;

    for (std::size_t r = 0; r < n; ++r) {
        const Complex arp = a(r, p);
        const Complex arq = a(r, q);
        a(r, p) = c * arp - s * arq;
        a(r, q) = s * arp + c * arq;
        const Complex wrp = w(r, p);
        const Complex wrq = w(r, q);
        w(r, p) = c * wrp - s * wrq;
        w(r, q) = s * wrp + c * wrq;
    }
    for (std::size_t k = 0; k < n; ++k) {
        const Complex apk = a(p, k);
        const Complex aqk = a(q, k);
        a(p, k) = c * apk - s * aqk;
        a(q, k) = s * apk + c * aqk;
    }
    a(p, q) = 0.0;
    a(q, p) = 0.0;
    a(p, p) = a(p, p).real();
    a(q, q) = a(q, q).real();
}

}  // namespace

EigenDecomposition hermitian_eigen(const ComplexMatrix& m, const Tolerances& tol) {
    if (!m.is_square()) {
        throw DomainError("hermitian_eigen: matrix is " + std::to_string(m.rows()) + "x" + std::to_string(m.cols()));
    }
    const double herm = m.hermitian_residual();
    if (herm > tol.eigen_input_hermitian) {
        throw DomainError("hermitian_eigen: input not Hermitian (residual " + std::to_string(herm) + ")");
    }

    const std::size_t n = m.rows();
    ComplexMatrix a = (m + m.adjoint()) * Complex(0.5);
    ComplexMatrix w = ComplexMatrix::identity(n);

    const double scale = std::max(a.frobenius_norm(), 1e-300);
    int sweep = 0;
    while (off_diagonal_mass(a) > tol.jacobi_off_diagonal * scale) {
        if (sweep++ == tol.jacobi_max_sweeps) {
            throw NumericalError("hermitian_eigen: no convergence after " + std::to_string(tol.jacobi_max_sweeps) +
                                 " sweeps");
        }
        for (std::size_t p = 0; p + 1 < n; ++p)
            for (std::size_t q = p + 1; q < n; ++q) rotate(a, w, p, q);
    }

    std::vector<std::size_t> order(n);
    std::iota(order.begin(), order.end(), 0);
    std::stable_sort(order.begin(), order.end(),
                     [&](std::size_t i, std::size_t j) { return a(i, i).real() > a(j, j).real(); });

    EigenDecomposition out{std::vector<double>(n), ComplexMatrix(n, n)};
    for (std::size_t k = 0; k < n; ++k) {
        out.eigenvalues[k] = a(order[k], order[k]).real();
        out.eigenvectors.set_column(k, w.column(order[k]));
    }
    return out;
}

double trace_norm(const ComplexMatrix& m, const Tolerances& tol) {
    double s = 0.0;
    for (double lambda : hermitian_eigen(m, tol).eigenvalues) s += std::abs(lambda);
    return s;
}

std::pair<double, double> pair_sum_eigenvalues(const StateVector& v0, const StateVector& v1) {
    if (v0.dim() != v1.dim()) throw DimensionError("pair_sum_eigenvalues: dimension mismatch");
    const Complex ip = inner(v0, v1);
    const double r = std::sqrt(std::max(0.0, v0.norm_squared() * v1.norm_squared() - ip.imag() * ip.imag()));
    return {ip.real() + r, ip.real() - r};
}

}  // namespace sqkd::linalg
