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

#include "sqkd/cli/render.hpp"

#include <cstdio>

#include "json.hpp"

namespace sqkd::cli {

using nlohmann::ordered_json;

std::string format_real(double x) {
    char buf[64];
    std::snprintf(buf, sizeof buf, "%.12g", x);
    return buf;
}

void write_rate_reports(std::ostream& out, std::span<const keyrate::KeyRateReport> reports, OutputFormat format) {
    if (format == OutputFormat::Csv) {
        out << "Q,Q_X,epsilon,delta,s_tau_bound,branch,g,r\n";
        for (const auto& r : reports) {
            out << format_real(r.q) << ',' << format_real(r.q_x) << ',' << format_real(r.epsilon) << ','
                << format_real(r.delta) << ',' << format_real(r.s_tau_bound) << ',' << keyrate::to_string(r.branch)
                << ',' << format_real(r.g) << ',' << format_real(r.r) << '\n';
        }
        return;
    }
    ordered_json arr = ordered_json::array();
    for (const auto& r : reports) {
        arr.push_back({{"Q", r.q},
                       {"Q_X", r.q_x},
                       {"epsilon", r.epsilon},
                       {"delta", r.delta},
                       {"s_tau_bound", r.s_tau_bound},
                       {"branch", keyrate::to_string(r.branch)},
                       {"g", r.g},
                       {"r", r.r}});
    }
    out << arr.dump(2) << '\n';
}

void write_threshold(std::ostream& out, const keyrate::QxModel& model, double threshold, OutputFormat format) {
    if (format == OutputFormat::Csv) {
        out << "model,threshold,threshold_percent\n"
            << model.name() << ',' << format_real(threshold) << ',' << format_real(100.0 * threshold) << '\n';
        return;
    }
    const ordered_json obj = {
        {"model", model.name()}, {"threshold", threshold}, {"threshold_percent", 100.0 * threshold}};
    out << obj.dump(2) << '\n';
}

void write_verify_reports(std::ostream& out, std::span<const VerifyReport> reports, OutputFormat format) {
    if (format == OutputFormat::Csv) {
        out << "check,trials,max_residual,tolerance,pass\n";
        for (const auto& r : reports) {
            out << r.check << ',' << r.trials << ',' << format_real(r.max_residual) << ',' << format_real(r.tolerance)
                << ',' << (r.pass ? "true" : "false") << '\n';
        }
        return;
    }
    ordered_json arr = ordered_json::array();
    for (const auto& r : reports) {
        arr.push_back({{"check", r.check},
                       {"trials", r.trials},
                       {"max_residual", r.max_residual},
                       {"tolerance", r.tolerance},
                       {"pass", r.pass}});
    }
    out << arr.dump(2) << '\n';
}

}  // namespace sqkd::cli
