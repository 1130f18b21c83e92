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

#include "sqkd/matrix.hpp"
#include "sqkd/random.hpp"
#include "sqkd/tolerances.hpp"

namespace sqkd::attacks {

using linalg::Complex;
using linalg::ComplexMatrix;
using linalg::StateVector;

/// Orthonormal qubit basis {|v0>, |v1>}.
struct QubitBasis {
    StateVector v0;
    StateVector v1;

    static QubitBasis z();
    /// DomainError unless the pair is an orthonormal basis of C^2.
    void validate(const Tolerances& tol = kDefaultTolerances) const;
};

/// Eve's general collective attack: U_F in the forward channel and U_R in the
/// reverse channel, both on T (x) E with E of dimension `ancilla_dim` and
/// initially in |0>.
class CollectiveAttack {
 public:
    /// DomainError unless both operators are unitary on C^2 (x) C^ancilla_dim.
    CollectiveAttack(ComplexMatrix forward, ComplexMatrix reverse, std::size_t ancilla_dim,
                     const Tolerances& tol = kDefaultTolerances);

    static CollectiveAttack identity(std::size_t ancilla_dim);
    static CollectiveAttack random(std::size_t ancilla_dim, linalg::SplitMix64& rng);

    const ComplexMatrix& forward() const { return forward_; }
    const ComplexMatrix& reverse() const { return reverse_; }
    std::size_t ancilla_dim() const { return ancilla_dim_; }

 private:
    ComplexMatrix forward_;
    ComplexMatrix reverse_;
    std::size_t ancilla_dim_;
};

/// |q0 eta1 sqrt(1-q1^2) + q1 conj(eta0) sqrt(1-q0^2)|, zero for a valid
/// restricted attack.
double restriction_residual(double q0, double q1, Complex eta0, Complex eta1);

/// Restricted collective attack: a biasing isometry F forward (fixed by q0,
/// q1, eta0, eta1 with respect to `basis`) and an arbitrary unitary on
/// T (x) E in reverse. F writes only to the span of |0>, |1> of E.
class RestrictedAttack {
 public:
    /// DomainError if q0, q1 leave [0,1], |eta_i| > 1, the restriction
    /// residual exceeds tol.restriction, ancilla_dim < 2, or `reverse` is not
    /// unitary on C^2 (x) C^ancilla_dim.
    RestrictedAttack(double q0, double q1, Complex eta0, Complex eta1, ComplexMatrix reverse, std::size_t ancilla_dim,
                     QubitBasis basis = QubitBasis::z(), const Tolerances& tol = kDefaultTolerances);

    double q0() const { return q0_; }
    double q1() const { return q1_; }
    Complex eta0() const { return eta0_; }
    Complex eta1() const { return eta1_; }
    const ComplexMatrix& reverse() const { return reverse_; }
    std::size_t ancilla_dim() const { return ancilla_dim_; }
    const QubitBasis& basis() const { return basis_; }

    /// |e> = eta0|0> + sqrt(1-|eta0|^2)|1> and |f> likewise from eta1.
    StateVector e_state() const;
    StateVector f_state() const;

    double constraint_residual() const { return restriction_residual(q0_, q1_, eta0_, eta1_); }

 private:
    double q0_, q1_;
    Complex eta0_, eta1_;
    ComplexMatrix reverse_;
    std::size_t ancilla_dim_;
    QubitBasis basis_;
};

/// Restricted attack with equal forward Z error Q on both inputs:
/// expands to (sqrt(1-Q), sqrt(1-Q), eta, -conj(eta), U).
struct SymmetricRestrictedAttack {
    double q;
    Complex eta;
    ComplexMatrix reverse;
    std::size_t ancilla_dim;

    RestrictedAttack expand(const Tolerances& tol = kDefaultTolerances) const;
};

/// The 4x2 isometry C^2 -> T (x) C^2 of the forward channel. Columns are F|0>
/// and F|1> in the computational basis, with
///   F|v0> = q0|0,0> + sqrt(1-q0^2)|1,e>,  F|v1> = sqrt(1-q1^2)|0,f> + q1|1,0>.
/// DomainError if F*F deviates from I by more than tol.unitary.
ComplexMatrix build_forward_isometry(const RestrictedAttack& r, const Tolerances& tol = kDefaultTolerances);

/// F extended to a unitary on T (x) E: column t * ancilla_dim equals F|t>
/// with the ancilla embedded in the first two E basis states.
ComplexMatrix forward_unitary(const RestrictedAttack& r, const Tolerances& tol = kDefaultTolerances);

/// Restricted attack equivalent to a collective one, with the intermediate
/// operator V (U = U_R V) kept for inspection.
struct RestrictedDerivation {
    RestrictedAttack attack;
    ComplexMatrix v;
    /// |eta0| (resp. |eta1|) reached the degenerate threshold and the
    /// corresponding column of V was left to the completion.
    bool degenerate0 = false;
    bool degenerate1 = false;
};

/// Reads q0 = alpha, q1 = beta and the ancilla states e0..e3 off
///   U_F|v0,0> = alpha|0,e0> + sqrt(1-alpha^2)|1,e1>,
///   U_F|v1,0> = sqrt(1-beta^2)|0,e2> + beta|1,e3>,
/// sets eta0 = <e3|e1>, eta1 = <e0|e2>, and builds V from e0, e3 and the
/// orthogonalized g0, g1. Ancilla states multiplied by a vanishing amplitude
/// are undefined; they are taken equal to their partner (e0<->e2, e1<->e3),
/// which lands in the degenerate branch.
RestrictedDerivation derive_restricted(const CollectiveAttack& c, const QubitBasis& basis = QubitBasis::z(),
                                       const Tolerances& tol = kDefaultTolerances);

inline RestrictedAttack derive_restricted_attack(const CollectiveAttack& c, const QubitBasis& basis = QubitBasis::z(),
                                                 const Tolerances& tol = kDefaultTolerances) {
    return derive_restricted(c, basis, tol).attack;
}

/// Random valid restricted attack in the Z basis: q0, q1 uniform on [0,1],
/// the free eta uniform on the unit disc, the other solved from the
/// restriction, Haar reverse unitary.
RestrictedAttack random_restricted_attack(std::size_t ancilla_dim, linalg::SplitMix64& rng);

/// Symmetric attack at Z error rate Q in both channels. The reverse unitary
/// is C (R(theta) (x) I_E) with sin^2(theta/2) = Q and C = |0><0| (x) W0 +
/// |1><1| (x) W1 for Haar W0, W1, so the reverse Z error is exactly Q for
/// every ancilla state. DomainError unless 0 <= Q <= 1/2.
SymmetricRestrictedAttack random_symmetric_attack(double q, linalg::SplitMix64& rng, std::size_t ancilla_dim = 2);

}  // namespace sqkd::attacks
