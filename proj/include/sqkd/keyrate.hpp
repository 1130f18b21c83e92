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

#include <string>
#include <vector>

namespace sqkd::keyrate {

/// How the X-basis error rate Q_X follows from the key error rate Q.
class QxModel {
 public:
    enum class Kind { Equal, Depolarizing, Half, Explicit };

    static QxModel equal() { return QxModel(Kind::Equal, 0.0); }
    static QxModel depolarizing() { return QxModel(Kind::Depolarizing, 0.0); }
    static QxModel half() { return QxModel(Kind::Half, 0.0); }
    /// DomainError unless 0 <= value <= 1/2.
    static QxModel explicit_value(double value);

    Kind kind() const { return kind_; }
    double value() const { return value_; }
    /// Q_X for a given Q.
    double qx(double q) const;
    /// equal, depolarizing, half or explicit:<value>.
    std::string name() const;

 private:
    QxModel(Kind kind, double value) : kind_(kind), value_(value) {}
    Kind kind_;
    double value_;
};

enum class Branch { Main, Floor };

/// "main" or "floor".
const char* to_string(Branch b);

struct KeyRateReport {
    double q;
    double q_x;
    double epsilon;
    double delta;
    double s_tau_bound;
    Branch branch;
    double g;
    double r;
};

struct BoundValue {
    double value;
    Branch branch;
};

/// eps + (1 + eps) h(eps / (1 + eps)) for eps in [0, 1].
double continuity_bound(double eps);

/// 2Q(1-Q) + (1/2 + 2Q(1-Q)) h(eps / (1 + eps)) with eps = 4Q(1-Q).
double delta(double q);

/// 1 - h(Q_X) for Q_X in [0, 1/2].
double tau_entropy_bound(double q_x);

/// s - delta(Q) when s >= 2 delta(Q), s / 2 otherwise.
BoundValue f_bound(double s_tau, double q);

/// Rate bound g - h(Q) for Q in [0, 1/2].
KeyRateReport key_rate(double q, const QxModel& model);

/// Largest Q <= 1/2 with r(Q) >= 0, to absolute precision tol. The rate is
/// scanned on a 1e-3 grid first; NumericalError if it is not decreasing there,
/// ThresholdAtBoundary if it never changes sign.
double noise_threshold(const QxModel& model, double tol = 1e-6);

/// `steps` evenly spaced evaluations on [q_min, q_max].
std::vector<KeyRateReport> keyrate_curve(double q_min, double q_max, std::size_t steps, const QxModel& model);

}  // namespace sqkd::keyrate
