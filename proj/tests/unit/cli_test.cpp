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

#include <gtest/gtest.h>

#include <cstdio>
#include <filesystem>
#include <fstream>
#include <sstream>
#include <string>
#include <vector>

#include "json.hpp"
#include "sqkd/cli/app.hpp"
#include "sqkd/cli/config.hpp"
#include "sqkd/keyrate.hpp"

using namespace sqkd;

namespace {

struct Result {
    int code;
    std::string out;
    std::string err;
};

Result run(std::vector<std::string> args) {
    args.insert(args.begin(), "sqkd");
    std::vector<const char*> argv;
    for (const auto& a : args) argv.push_back(a.c_str());
    std::ostringstream out, err;
    const int code = cli::run_cli(static_cast<int>(argv.size()), argv.data(), out, err);
    return {code, out.str(), err.str()};
}

std::vector<std::string> split(const std::string& s, char sep) {
    std::vector<std::string> out;
    std::string cur;
    std::istringstream in(s);
    while (std::getline(in, cur, sep)) out.push_back(cur);
    return out;
}

// Field `name` of the first data row of a CSV document.
double csv_field(const std::string& csv, const std::string& name, std::size_t row = 1) {
    const auto lines = split(csv, '\n');
    const auto header = split(lines.at(0), ',');
    const auto values = split(lines.at(row), ',');
    for (std::size_t i = 0; i < header.size(); ++i)
        if (header[i] == name) return std::stod(values.at(i));
    ADD_FAILURE() << "no column " << name;
    return 0.0;
}

}  // namespace

TEST(cli_rate, perfect_channel) {
    const auto r = run({"rate", "--q", "0", "--qx-model", "equal"});
    ASSERT_EQ(r.code, 0) << r.err;
    EXPECT_EQ(split(r.out, '\n').at(0), "Q,Q_X,epsilon,delta,s_tau_bound,branch,g,r");
    EXPECT_EQ(csv_field(r.out, "r"), 1.0);
}

TEST(cli_rate, table_point) {
    const auto r = run({"rate", "--q", "0.0614", "--qx-model", "equal"});
    ASSERT_EQ(r.code, 0);
    EXPECT_LE(std::abs(csv_field(r.out, "r")), 5e-3);
    EXPECT_NE(r.out.find(",floor,"), std::string::npos);
}

TEST(cli_rate, json_is_bit_exact) {
    const auto r = run({"rate", "--q", "0.05", "--qx-model", "explicit:0.025", "--format", "json"});
    ASSERT_EQ(r.code, 0);
    const auto j = nlohmann::json::parse(r.out);
    ASSERT_EQ(j.size(), 1u);
    const auto lib = keyrate::key_rate(0.05, keyrate::QxModel::explicit_value(0.025));
    EXPECT_EQ(j[0]["r"].get<double>(), lib.r);
    EXPECT_EQ(j[0]["g"].get<double>(), lib.g);
    EXPECT_EQ(j[0]["branch"], "floor");
}

TEST(cli_threshold, table_values) {
    const std::pair<const char*, std::pair<double, double>> cases[] = {
        {"equal", {0.0614, 2e-4}}, {"depolarizing", {0.0482, 2e-4}}, {"half", {0.075, 5e-4}}};
    for (const auto& [model, target] : cases) {
        const auto r = run({"threshold", "--qx-model", model});
        ASSERT_EQ(r.code, 0) << r.err;
        const double t = csv_field(r.out, "threshold");
        EXPECT_NEAR(t, target.first, target.second) << model;
        EXPECT_NEAR(csv_field(r.out, "threshold_percent"), 100.0 * t, 1e-9);
    }
    const auto j = run({"threshold", "--qx-model", "equal", "--format", "json", "--tol", "1e-9"});
    ASSERT_EQ(j.code, 0);
    const auto parsed = nlohmann::json::parse(j.out);
    EXPECT_EQ(parsed["model"], "equal");
    EXPECT_NEAR(parsed["threshold"].get<double>(), keyrate::noise_threshold(keyrate::QxModel::equal(), 1e-9), 0.0);
}

TEST(cli_curve, three_points) {
    const auto r = run({"curve", "--q-min", "0", "--q-max", "0.1", "--steps", "3"});
    ASSERT_EQ(r.code, 0);
    const auto lines = split(r.out, '\n');
    ASSERT_EQ(lines.size(), 4u);
    EXPECT_EQ(csv_field(r.out, "Q", 2), 0.05);
    EXPECT_EQ(csv_field(r.out, "r", 1), 1.0);
}

TEST(cli_curve, json_round_trip) {
    const auto r = run({"curve", "--q-min", "0", "--q-max", "0.1", "--steps", "5", "--format", "json"});
    ASSERT_EQ(r.code, 0);
    const auto j = nlohmann::json::parse(r.out);
    const auto lib = keyrate::keyrate_curve(0.0, 0.1, 5, keyrate::QxModel::equal());
    ASSERT_EQ(j.size(), lib.size());
    for (std::size_t i = 0; i < lib.size(); ++i) {
        EXPECT_EQ(j[i]["Q"].get<double>(), lib[i].q);
        EXPECT_EQ(j[i]["delta"].get<double>(), lib[i].delta);
        EXPECT_EQ(j[i]["r"].get<double>(), lib[i].r);
        EXPECT_EQ(nlohmann::json::parse(j[i].dump()), j[i]);
    }
}

TEST(cli_curve, table_row) {
    const auto r = run({"curve", "--q-min", "0.0614", "--q-max", "0.1", "--steps", "2"});
    ASSERT_EQ(r.code, 0);
    EXPECT_LE(std::abs(csv_field(r.out, "r", 1)), 5e-3);
}

TEST(cli_verify, identity_attacks_give_zero_residuals) {
    const auto r = run({"verify", "--trials", "1", "--seed", "7", "--identity-attacks"});
    ASSERT_EQ(r.code, 0) << r.out;
    const auto lines = split(r.out, '\n');
    ASSERT_EQ(lines.size(), 9u);
    EXPECT_EQ(lines[0], "check,trials,max_residual,tolerance,pass");
    for (std::size_t i = 1; i < lines.size(); ++i) EXPECT_LE(csv_field(r.out, "max_residual", i), 1e-14) << lines[i];
}

TEST(cli_verify, seeded_suite_passes_and_is_deterministic) {
    const std::vector<std::string> args = {"verify", "--trials", "200", "--seed", "42", "--d-e", "2,3,4"};
    const auto a = run(args);
    const auto b = run(args);
    ASSERT_EQ(a.code, 0) << a.out;
    EXPECT_EQ(a.out, b.out);
    EXPECT_LE(csv_field(a.out, "max_residual", 1), 1e-9);
    const auto other = run({"verify", "--trials", "30", "--seed", "43", "--d-e", "2,3,4"});
    EXPECT_NE(a.out, other.out);
}

TEST(cli_verify, failing_check_exits_one) {
    const auto r = run({"verify", "--trials", "2", "--seed", "1", "--tol", "1e-300"});
    EXPECT_EQ(r.code, 1);
    EXPECT_NE(r.out.find("false"), std::string::npos);
}

TEST(cli_verify, json_output) {
    const auto r = run({"verify", "--trials", "2", "--seed", "3", "--format", "json"});
    ASSERT_EQ(r.code, 0);
    const auto j = nlohmann::json::parse(r.out);
    ASSERT_EQ(j.size(), 8u);
    EXPECT_EQ(j[0]["check"], "thm1-equivalence");
    EXPECT_EQ(j[7]["check"], "isometry");
    EXPECT_TRUE(j[0]["pass"].get<bool>());
}

TEST(cli_usage, errors_exit_two) {
    EXPECT_EQ(run({}).code, 2);
    EXPECT_EQ(run({"rate"}).code, 2);
    EXPECT_EQ(run({"rate", "--q", "0.7"}).code, 2);
    EXPECT_EQ(run({"rate", "--q", "abc"}).code, 2);
    EXPECT_EQ(run({"rate", "--q", "0.1", "--qx-model", "bogus"}).code, 2);
    EXPECT_EQ(run({"rate", "--q", "0.1", "--qx-model", "explicit:0.9"}).code, 2);
    EXPECT_EQ(run({"rate", "--q", "0.1", "--format", "xml"}).code, 2);
    EXPECT_EQ(run({"curve", "--q-min", "0.2", "--q-max", "0.1"}).code, 2);
    EXPECT_EQ(run({"curve", "--steps", "1"}).code, 2);
    EXPECT_EQ(run({"verify", "--d-e", "1"}).code, 2);
    EXPECT_EQ(run({"verify", "--d-e", "9"}).code, 2);
    EXPECT_EQ(run({"verify", "--trials", "0"}).code, 2);
    EXPECT_EQ(run({"threshold", "--tol", "-1"}).code, 2);
    EXPECT_EQ(run({"frobnicate"}).code, 2);
    EXPECT_EQ(run({"--help"}).code, 0);
}

TEST(cli_output, writes_file_and_reports_io_errors) {
    const auto path = std::filesystem::temp_directory_path() / "sqkd_cli_test_curve.csv";
    const auto r = run({"curve", "--steps", "4", "--output", path.string()});
    ASSERT_EQ(r.code, 0);
    EXPECT_TRUE(r.out.empty());
    std::ifstream in(path);
    std::stringstream content;
    content << in.rdbuf();
    EXPECT_EQ(split(content.str(), '\n').size(), 5u);
    std::filesystem::remove(path);

    const auto bad = run({"curve", "--output", "/nonexistent-dir/x.csv"});
    EXPECT_EQ(bad.code, 1);
    EXPECT_FALSE(bad.err.empty());
}

TEST(parse_qx_model, forms) {
    EXPECT_EQ(cli::parse_qx_model("half").kind(), keyrate::QxModel::Kind::Half);
    EXPECT_EQ(cli::parse_qx_model("explicit:0.1").value(), 0.1);
    EXPECT_THROW(cli::parse_qx_model("explicit:"), cli::UsageError);
    EXPECT_THROW(cli::parse_qx_model("explicit:0.1x"), cli::UsageError);
}
