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

#include "sqkd/cli/verify.hpp"

#include <algorithm>
#include <cmath>
#include <span>

#include "sqkd/entropy.hpp"
#include "sqkd/keyrate.hpp"
#include "sqkd/pistar.hpp"
#include "sqkd/protocol.hpp"
#include "sqkd/spectral.hpp"

namespace sqkd::cli {

using namespace sqkd::attacks;
using linalg::MeasurementBasis;
using linalg::SplitMix64;

namespace {

constexpr double kEntropyTolerance = 1e-9;
constexpr double kIsometryTolerance = 1e-10;
constexpr BobOperation kOperations[] = {BobOperation::MeasureResend, BobOperation::Reflect};

class Tracker {
 public:
    Tracker(std::string name, double tolerance) : report_{std::move(name), 0, 0.0, tolerance, false} {}
    void record(double residual) { report_.max_residual = std::max(report_.max_residual, residual); }
    void count() { ++report_.trials; }
    VerifyReport finish() {
        report_.pass = report_.max_residual <= report_.tolerance;
        return report_;
    }

 private:
    VerifyReport report_;
};

SplitMix64 trial_stream(std::uint64_t seed, std::uint64_t check, std::uint64_t trial) {
    return SplitMix64::stream(linalg::mix64(seed ^ (check * 0x9e3779b97f4a7c15ULL)), trial);
}

double excess(double value, double bound) { return std::max(0.0, value - bound); }

ComplexMatrix identity_reverse(std::size_t d) { return ComplexMatrix::identity(2 * d); }

void check_restricted_equivalence(const VerifyOptions& o, Tracker& restricted, Tracker& iso) {
    for (std::size_t t = 0; t < o.trials; ++t) {
        const std::size_t d = o.d_e[t % o.d_e.size()];
        auto rng = trial_stream(o.seed, 1, t);
        const CollectiveAttack c =
            o.identity_attacks ? CollectiveAttack::identity(d) : CollectiveAttack::random(d, rng);
        const RestrictedDerivation der = derive_restricted(c);
        iso.record(der.v.unitarity_residual());
        iso.record(forward_unitary(der.attack).unitarity_residual());
        for (const StateVector& s : alice_states()) {
            for (BobOperation op : kOperations) {
                restricted.record(linalg::trace_distance(simulate_sqkd(c, s, op), simulate_sqkd(der.attack, s, op)));
            }
        }
        restricted.count();
        iso.count();
    }
}

void check_rewind_equivalence(const VerifyOptions& o, Tracker& rewind, Tracker& iso) {
    for (std::size_t t = 0; t < o.trials; ++t) {
        const std::size_t d = o.d_e[t % o.d_e.size()];
        auto rng = trial_stream(o.seed, 2, t);
        const RestrictedAttack r = o.identity_attacks ? RestrictedAttack(1.0, 1.0, 0.0, 0.0, identity_reverse(d), d)
                                                      : random_restricted_attack(d, rng);
        iso.record(build_forward_isometry(r).isometry_residual());
        iso.record(build_rewind(r).isometry_residual());
        const PiStarAttack e = derive_pistar_attack(r);
        iso.record(e.unitary().unitarity_residual());
        for (BobOperation op : kOperations) {
            rewind.record(linalg::trace_distance(simulate_entangled_sqkd(r, op), simulate_pistar(e, op)));
        }
        rewind.count();
        iso.count();
    }
}

void check_trace_norm(const VerifyOptions& o, Tracker& pairs) {
    for (std::size_t t = 0; t < o.trials; ++t) {
        auto rng = trial_stream(o.seed, 3, t);
        const std::size_t dim = 2 + t % 7;
        StateVector v0(dim), v1(dim);
        const double s0 = rng.uniform(), s1 = rng.uniform();
        for (std::size_t k = 0; k < dim; ++k) v0[k] = s0 * rng.complex_gaussian();
        for (std::size_t k = 0; k < dim; ++k) v1[k] = s1 * rng.complex_gaussian();
        const ComplexMatrix m = linalg::outer(v0, v1) + linalg::outer(v1, v0);
        const double bound = 2.0 * std::sqrt(v0.norm_squared() * v1.norm_squared());
        pairs.record(excess(linalg::trace_norm(m), bound));

        const auto [hi, lo] = linalg::pair_sum_eigenvalues(v0, v1);
        std::vector<double> expected(dim, 0.0);
        expected.front() = hi;
        expected.back() = lo;
        const auto eig = linalg::hermitian_eigen(m);
        for (std::size_t k = 0; k < dim; ++k) pairs.record(std::abs(eig.eigenvalues[k] - expected[k]));
        pairs.count();
    }
}

struct SymmetricTrackers {
    Tracker uncertainty{"uncertainty", kEntropyTolerance};
    Tracker continuity{"continuity", kEntropyTolerance};
    Tracker main_ent{"main-ent", kEntropyTolerance};
    Tracker epsilon{"epsilon-bound", kEntropyTolerance};
};

void check_symmetric(const VerifyOptions& o, SymmetricTrackers& k, Tracker& iso) {
    const std::span<const double> levels = o.identity_attacks ? std::span<const double>(kVerifyNoiseLevels, 1)
                                                              : std::span<const double>(kVerifyNoiseLevels);
    std::uint64_t index = 0;
    for (double q : levels) {
        for (std::size_t t = 0; t < o.trials; ++t, ++index) {
            const std::size_t d = o.d_e[t % o.d_e.size()];
            auto rng = trial_stream(o.seed, 4, index);
            const SymmetricRestrictedAttack sa = o.identity_attacks
                                                     ? SymmetricRestrictedAttack{0.0, 0.0, identity_reverse(d), d}
                                                     : random_symmetric_attack(q, rng, d);
            const RestrictedAttack r = sa.expand();
            iso.record(build_forward_isometry(r).isometry_residual());
            iso.record(build_rewind(r).isometry_residual());
            const PiStarAttack e = derive_pistar_attack(r);
            iso.record(e.unitary().unitarity_residual());

            const TauSigmaMu tsm = build_tau_sigma_mu(e);
            const double s_tau = linalg::conditional_entropy(tsm.tau, {Register::A1}, {Register::E});
            const double s_sigma = linalg::conditional_entropy(tsm.sigma, {Register::A1}, {Register::E});
            const double s_mu = linalg::conditional_entropy(tsm.mu, {Register::A1}, {Register::E});

            const auto reflect = simulate_pistar(e, BobOperation::Reflect);
            const auto x_measured = linalg::measure_register(reflect, Register::A1, MeasurementBasis::X);
            const double s_x = linalg::conditional_entropy(x_measured, {Register::A1}, {Register::A2});
            const double q_x = pistar_x_error(e);
            k.uncertainty.record(excess(1.0, s_tau + s_x));
            k.uncertainty.record(excess(1.0 - linalg::binary_entropy(q_x), s_tau));

            const double td = linalg::trace_distance(tsm.tau, tsm.mu);
            k.continuity.record(excess(std::abs(s_tau - s_mu), keyrate::continuity_bound(std::min(td, 1.0))));
            k.epsilon.record(excess(td, 4.0 * sa.q * (1.0 - sa.q)));

            k.main_ent.record(excess(keyrate::f_bound(s_tau, sa.q).value, s_sigma));
            // h is symmetric about 1/2, so an X error rate above 1/2 bounds the
            // rate exactly as its complement does.
            const auto model = keyrate::QxModel::explicit_value(std::min(q_x, 1.0 - q_x));
            const double simulated_rate = s_sigma - pistar_key_error_entropy(e);
            k.main_ent.record(excess(keyrate::key_rate(sa.q, model).r, simulated_rate));

            k.uncertainty.count();
            k.continuity.count();
            k.main_ent.count();
            k.epsilon.count();
            iso.count();
        }
    }
}

}  // namespace

std::vector<VerifyReport> run_verify(const VerifyOptions& options) {
    Tracker restricted("thm1-equivalence", kEntropyTolerance);
    Tracker rewind("thm2-equivalence", kEntropyTolerance);
    Tracker pairs("lemma-trd", kEntropyTolerance);
    SymmetricTrackers sym;
    Tracker iso("isometry", kIsometryTolerance);

    check_restricted_equivalence(options, restricted, iso);
    check_rewind_equivalence(options, rewind, iso);
    check_trace_norm(options, pairs);
    check_symmetric(options, sym, iso);

    std::vector<VerifyReport> out = {
        restricted.finish(),     rewind.finish(),       pairs.finish(),       sym.uncertainty.finish(),
        sym.continuity.finish(), sym.main_ent.finish(), sym.epsilon.finish(), iso.finish()};
    if (options.tolerance_override > 0.0) {
        for (auto& r : out) {
            r.tolerance = options.tolerance_override;
            r.pass = r.max_residual <= r.tolerance;
        }
    }
    return out;
}

}  // namespace sqkd::cli
