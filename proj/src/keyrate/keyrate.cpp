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

#include "sqkd/keyrate.hpp"

#include <cmath>
#include <cstdio>

#include "sqkd/entropy.hpp"
#include "sqkd/errors.hpp"

namespace sqkd::keyrate {

using linalg::binary_entropy;

namespace {

constexpr double kGridStep = 1e-3;

void require_probability(double x, double hi, const char* what) {
    if (!(x >= 0.0 && x <= hi)) {
        char buf[128];
        std::snprintf(buf, sizeof buf, "%s: argument %.17g outside [0, %g]", what, x, hi);
        throw DomainError(buf);
    }
}

}  // namespace

QxModel QxModel::explicit_value(double value) {
    require_probability(value, 0.5, "QxModel::explicit_value");
    return QxModel(Kind::Explicit, value);
}

double QxModel::qx(double q) const {
    switch (kind_) {
        case Kind::Equal:
            return q;
        case Kind::Depolarizing:
            return 2.0 * q * (1.0 - q);
        case Kind::Half:
            return 0.5 * q;
        case Kind::Explicit:
            return value_;
    }
    return q;
}

std::string QxModel::name() const {
    switch (kind_) {
        case Kind::Equal:
            return "equal";
        case Kind::Depolarizing:
            return "depolarizing";
        case Kind::Half:
            return "half";
        case Kind::Explicit: {
            char buf[64];
            std::snprintf(buf, sizeof buf, "explicit:%.12g", value_);
            return buf;
        }
    }
    return "";
}

const char* to_string(Branch b) { return b == Branch::Main ? "main" : "floor"; }

double continuity_bound(double eps) {
    require_probability(eps, 1.0, "continuity_bound");
    return eps + (1.0 + eps) * binary_entropy(eps / (1.0 + eps));
}

double delta(double q) {
    require_probability(q, 1.0, "delta");
    const double w = 2.0 * q * (1.0 - q);
    const double eps = 2.0 * w;
    return w + (0.5 + w) * binary_entropy(eps / (1.0 + eps));
}

double tau_entropy_bound(double q_x) {
    require_probability(q_x, 0.5, "tau_entropy_bound");
    return 1.0 - binary_entropy(q_x);
}

BoundValue f_bound(double s_tau, double q) {
    const double d = delta(q);
    if (s_tau >= 2.0 * d) return {s_tau - d, Branch::Main};
    return {0.5 * s_tau, Branch::Floor};
}

KeyRateReport key_rate(double q, const QxModel& model) {
    require_probability(q, 0.5, "key_rate");
    KeyRateReport rep{};
    rep.q = q;
    rep.q_x = model.qx(q);
    rep.epsilon = 4.0 * q * (1.0 - q);
    rep.delta = delta(q);
    rep.s_tau_bound = tau_entropy_bound(rep.q_x);
    const BoundValue g = f_bound(rep.s_tau_bound, q);
    rep.branch = g.branch;
    rep.g = g.value;
    rep.r = g.value - binary_entropy(q);
    return rep;
}

double noise_threshold(const QxModel& model, double tol) {
    if (!(tol > 0.0)) throw DomainError("noise_threshold: tol must be positive");
    auto rate = [&](double q) { return key_rate(q, model).r; };
    if (!(rate(0.0) > 0.0)) throw ThresholdAtBoundary("noise_threshold: rate at Q = 0 is not positive");

    const auto n = static_cast<std::size_t>(std::llround(0.5 / kGridStep));
    double lo = 0.0;
    double r_lo = rate(0.0);
    bool bracketed = false;
    double hi = 0.5;
    for (std::size_t i = 1; i <= n; ++i) {
        const double q = static_cast<double>(i) * kGridStep;
        const double r = rate(q);
        if (r > r_lo) {
            char buf[128];
            std::snprintf(buf, sizeof buf, "noise_threshold: rate increases between Q = %.6g and %.6g", lo, q);
            throw NumericalError(buf);
        }
        if (!bracketed && r < 0.0) {
            hi = q;
            bracketed = true;
        }
        if (!bracketed) lo = q;
        r_lo = r;
    }
    if (!bracketed) throw ThresholdAtBoundary("noise_threshold: rate stays non-negative up to Q = 1/2");

    while (hi - lo > tol) {
        const double mid = 0.5 * (lo + hi);
        if (rate(mid) >= 0.0) {
            lo = mid;
        } else {
            hi = mid;
        }
    }
    return lo;
}

std::vector<KeyRateReport> keyrate_curve(double q_min, double q_max, std::size_t steps, const QxModel& model) {
    if (!(q_min >= 0.0 && q_min < q_max && q_max <= 0.5)) {
        throw DomainError("keyrate_curve: need 0 <= q_min < q_max <= 1/2");
    }
    if (steps < 2) throw DomainError("keyrate_curve: need at least 2 steps");
    std::vector<KeyRateReport> out;
    out.reserve(steps);
    const double span = q_max - q_min;
    for (std::size_t i = 0; i < steps; ++i) {
        const double q =
            i + 1 == steps ? q_max : q_min + span * static_cast<double>(i) / static_cast<double>(steps - 1);
        out.push_back(key_rate(q, model));
    }
    return out;
}

}  // namespace sqkd::keyrate
