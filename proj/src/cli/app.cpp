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

#include "sqkd/cli/app.hpp"

#include <fstream>
#include <sstream>

#include "CLI11.hpp"
#include "sqkd/cli/config.hpp"
#include "sqkd/cli/render.hpp"
#include "sqkd/cli/verify.hpp"
#include "sqkd/errors.hpp"

namespace sqkd::cli {

namespace {

constexpr double kDefaultThresholdTol = 1e-6;

struct RawFlags {
    std::string qx_model = "equal";
    std::string format = "csv";
    std::string output;
};

void add_output_flags(CLI::App& sub, RawFlags& raw) {
    sub.add_option("--format", raw.format, "Output format")
        ->check(CLI::IsMember({"csv", "json"}))
        ->capture_default_str();
    sub.add_option("--output", raw.output, "Write to this file instead of stdout");
}

void add_tol_flag(CLI::App& sub, RunConfig& c, const std::string& description) {
    sub.add_option_function<double>("--tol", [&c](const double& v) { c.tol = v; }, description);
}

int execute(const RunConfig& c, std::ostream& out) {
    switch (c.command) {
        case Command::Rate: {
            const keyrate::KeyRateReport r = keyrate::key_rate(c.q, c.qx_model);
            write_rate_reports(out, std::span(&r, 1), c.format);
            return 0;
        }
        case Command::Threshold: {
            const double t = keyrate::noise_threshold(c.qx_model, c.tol.value_or(kDefaultThresholdTol));
            write_threshold(out, c.qx_model, t, c.format);
            return 0;
        }
        case Command::Curve: {
            const auto reports = keyrate::keyrate_curve(c.q_min, c.q_max, c.steps, c.qx_model);
            write_rate_reports(out, reports, c.format);
            return 0;
        }
        case Command::Verify: {
            VerifyOptions o;
            o.trials = c.trials;
            o.d_e = c.d_e;
            o.seed = c.seed;
            o.identity_attacks = c.identity_attacks;
            o.tolerance_override = c.tol.value_or(0.0);
            const auto reports = run_verify(o);
            write_verify_reports(out, reports, c.format);
            for (const auto& r : reports) {
                if (!r.pass) return 1;
            }
            return 0;
        }
    }
    return 1;
}

}  // namespace

int run_cli(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
    RunConfig c;
    RawFlags raw;
    CLI::App app{"Key-rate bounds and reduction checks for a semi-quantum key distribution protocol", "sqkd"};
    app.require_subcommand(1);

    auto* rate = app.add_subcommand("rate", "Key-rate bound at one noise level");
    rate->add_option("--q", c.q, "Z-basis error rate Q")->required();
    rate->add_option("--qx-model", raw.qx_model, "equal | depolarizing | half | explicit:<value>")
        ->capture_default_str();
    add_output_flags(*rate, raw);

    auto* threshold = app.add_subcommand("threshold", "Largest Q with a non-negative rate");
    threshold->add_option("--qx-model", raw.qx_model, "equal | depolarizing | half | explicit:<value>")
        ->capture_default_str();
    add_tol_flag(*threshold, c, "Bisection precision [1e-6]");
    add_output_flags(*threshold, raw);

    auto* curve = app.add_subcommand("curve", "Key-rate bound on an even grid of Q");
    curve->add_option("--q-min", c.q_min, "Grid start")->capture_default_str();
    curve->add_option("--q-max", c.q_max, "Grid end")->capture_default_str();
    curve->add_option("--steps", c.steps, "Number of grid points")->capture_default_str();
    curve->add_option("--qx-model", raw.qx_model, "equal | depolarizing | half | explicit:<value>")
        ->capture_default_str();
    add_output_flags(*curve, raw);

    auto* verify = app.add_subcommand("verify", "Randomized checks of the reductions and bounds");
    verify->add_option("--trials", c.trials, "Instances per check")->capture_default_str();
    verify->add_option("--d-e", c.d_e, "Ancilla dimensions, comma separated")->delimiter(',')->capture_default_str();
    verify->add_option("--seed", c.seed, "RNG seed")->capture_default_str();
    verify->add_flag("--identity-attacks", c.identity_attacks, "Use the noiseless identity attack throughout");
    add_tol_flag(*verify, c, "Override every check tolerance");
    add_output_flags(*verify, raw);

    try {
        app.parse(argc, argv);
        if (*rate) c.command = Command::Rate;
        if (*threshold) c.command = Command::Threshold;
        if (*curve) c.command = Command::Curve;
        if (*verify) c.command = Command::Verify;
        c.qx_model = parse_qx_model(raw.qx_model);
        c.format = raw.format == "json" ? OutputFormat::Json : OutputFormat::Csv;
        if (!raw.output.empty()) c.output_path = raw.output;
        validate(c);
    } catch (const CLI::Success& e) {
        return app.exit(e, out, err);
    } catch (const CLI::ParseError& e) {
        app.exit(e, out, err);
        return 2;
    } catch (const UsageError& e) {
        err << "error: " << e.what() << '\n';
        return 2;
    }

    try {
        if (!c.output_path) return execute(c, out);
        std::ostringstream buffer;
        const int code = execute(c, buffer);
        std::ofstream file(*c.output_path, std::ios::binary);
        if (!file || !(file << buffer.str()) || !file.flush()) {
            err << "error: cannot write " << *c.output_path << '\n';
            return 1;
        }
        return code;
    } catch (const std::exception& e) {
        err << "error: " << e.what() << '\n';
        return 1;
    }
}

}  // namespace sqkd::cli
