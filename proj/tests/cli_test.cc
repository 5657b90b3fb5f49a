// Copyright 2026 The cvqkd Authors
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

#include "cvqkd/cli.h"

#include <filesystem>
#include <fstream>
#include <sstream>

#include "gtest/gtest.h"
#include "json.hpp"

using namespace cvqkd;

namespace {

struct Result {
    int code;
    std::string out;
    std::string err;
};

Result run(const std::vector<std::string> &args) {
    std::ostringstream out, err;
    int code = cli::run(args, out, err);
    return Result{code, out.str(), err.str()};
}

std::filesystem::path scratch(const std::string &name) {
    std::filesystem::path dir = std::filesystem::temp_directory_path() / "cvqkd_cli_test";
    std::filesystem::create_directories(dir);
    return dir / name;
}

void write(const std::filesystem::path &p, const std::string &text) {
    std::ofstream f(p, std::ios::binary);
    f << text;
}

std::string slurp(const std::filesystem::path &p) {
    std::ifstream f(p, std::ios::binary);
    std::ostringstream ss;
    ss << f.rdbuf();
    return ss.str();
}

size_t count(const std::string &haystack, const std::string &needle) {
    size_t n = 0;
    for (size_t pos = haystack.find(needle); pos != std::string::npos; pos = haystack.find(needle, pos + 1)) {
        n++;
    }
    return n;
}

}  // namespace

TEST(cli, usage_errors) {
    EXPECT_EQ(run({}).code, cli::kUsage);
    EXPECT_EQ(run({"frobnicate"}).code, cli::kUsage);
    EXPECT_EQ(run({"attack", "--eta", "0.5"}).code, cli::kUsage);
    EXPECT_EQ(run({"attack", "--eta", "half", "--delta", "0.1", "--va", "10"}).code, cli::kUsage);
    EXPECT_EQ(run({"attack", "--eta", "0.5", "--delta", "0.1", "--va", "10", "--kind", "cloning"}).code,
              cli::kUsage);
    EXPECT_EQ(run({"--help"}).code, cli::kOk);
}

TEST(cli, attack_table) {
    Result r = run({"attack", "--eta", "0.5", "--delta", "0.1", "--va", "10"});
    ASSERT_EQ(r.code, cli::kOk) << r.err;
    EXPECT_NE(r.out.find("optimal"), std::string::npos);
    EXPECT_NE(r.out.find("1.549295774647887"), std::string::npos);
    EXPECT_NE(r.out.find("yes"), std::string::npos);
}

TEST(cli, attack_json) {
    Result r = run({"attack", "--eta", "0.5", "--delta", "0.1", "--va", "10", "--kind", "clone", "--json"});
    ASSERT_EQ(r.code, cli::kOk) << r.err;
    EXPECT_EQ(count(r.out, "\n"), 1u);
    nlohmann::json j = nlohmann::json::parse(r.out);
    std::vector<std::string> keys;
    for (auto it = j.begin(); it != j.end(); ++it) {
        keys.push_back(it.key());
    }
    EXPECT_EQ(keys, (std::vector<std::string>{"delta", "eta", "kind", "secure", "theta", "threshold_eta", "v_a",
                                              "v_ba_snu", "v_be_p_snu", "v_be_x_snu"}));
    EXPECT_EQ(j["kind"], "clone");
    EXPECT_NEAR(j["v_be_x_snu"].get<double>(), 1.705069124423963, 1e-13);
    EXPECT_TRUE(j["secure"].get<bool>());
    // keys appear sorted in the raw text as well
    EXPECT_LT(r.out.find("\"delta\""), r.out.find("\"eta\""));
    EXPECT_LT(r.out.find("\"v_ba_snu\""), r.out.find("\"v_be_p_snu\""));
}

TEST(cli, clone_on_lossy_line_is_insecure) {
    Result r = run({"attack", "--eta", "0.1", "--delta", "0.1", "--va", "10", "--kind", "clone", "--json"});
    ASSERT_EQ(r.code, cli::kOk) << r.err;
    EXPECT_FALSE(nlohmann::json::parse(r.out)["secure"].get<bool>());
}

TEST(cli, domain_violation) {
    Result r = run({"attack", "--eta", "0.04", "--delta", "0.1", "--va", "10", "--kind", "bma"});
    EXPECT_EQ(r.code, cli::kDomain);
    EXPECT_NE(r.err.find("delta < 2*eta"), std::string::npos);
    EXPECT_EQ(run({"attack", "--eta", "0.5", "--delta", "0.1", "--va", "0"}).code, cli::kDomain);
    EXPECT_EQ(run({"thresholds", "--va", "-1"}).code, cli::kDomain);
    EXPECT_EQ(run({"thresholds", "--steps", "1"}).code, cli::kDomain);
    EXPECT_EQ(run({"thresholds", "--delta-min", "0.5", "--delta-max", "0.1"}).code, cli::kDomain);
}

TEST(cli, montecarlo_reproducible) {
    std::vector<std::string> args{"montecarlo", "--eta",  "0.5",   "--delta", "0.1",  "--va",
                                  "10",         "--kind", "bma",   "--samples", "20000", "--seed",
                                  "9",          "--json"};
    Result a = run(args);
    ASSERT_EQ(a.code, cli::kOk) << a.err;
    Result b = run(args);
    EXPECT_EQ(a.out, b.out);
    nlohmann::json j = nlohmann::json::parse(a.out);
    for (const char *row : {"v_ba_x", "v_ba_p", "v_be_x", "v_be_p"}) {
        EXPECT_LT(std::abs(j["rows"][row]["z"].get<double>()), 5) << row;
    }
    Result table = run({"montecarlo", "--eta", "0.5", "--delta", "0.1", "--va", "10", "--samples", "5000"});
    ASSERT_EQ(table.code, cli::kOk);
    EXPECT_NE(table.out.find("v_be_x"), std::string::npos);
}

TEST(cli, montecarlo_too_few_samples) {
    EXPECT_EQ(run({"montecarlo", "--eta", "0.5", "--delta", "0.1", "--va", "10", "--samples", "10"}).code,
              cli::kDomain);
}

TEST(cli, thresholds_to_stdout) {
    Result r = run({"thresholds"});
    ASSERT_EQ(r.code, cli::kOk) << r.err;
    EXPECT_EQ(count(r.out, "\n"), 63u);
    EXPECT_EQ(r.out.rfind("# cvqkd-thresholds v1 va=1e+06\n", 0), 0u);
    EXPECT_NE(r.out.find("\n0.6,"), std::string::npos);
}

TEST(cli, thresholds_then_plot) {
    auto csv = scratch("sweep.csv");
    auto svg = scratch("sweep.svg");
    ASSERT_EQ(run({"thresholds", "--va", "1e6", "--out", csv.string()}).code, cli::kOk);
    Result r = run({"plot", "--in", csv.string(), "--out", svg.string()});
    ASSERT_EQ(r.code, cli::kOk) << r.err;
    std::string text = slurp(svg);
    EXPECT_EQ(count(text, "<polyline"), 5u);
    EXPECT_EQ(count(text, "class=\"legend-entry\""), 5u);
}

TEST(cli, plot_single_row) {
    auto csv = scratch("one.csv");
    write(csv, "# cvqkd-thresholds v1 va=10\ndelta,eta_clone,eta_anticlone,eta_bma,eta_opt,eta_intercept_resend\n"
               "0.1,0.1465,0.17,0.208,0.21,0.05\n");
    Result r = run({"plot", "--in", csv.string(), "--out", "-"});
    ASSERT_EQ(r.code, cli::kOk) << r.err;
    EXPECT_EQ(count(r.out, "<polyline"), 5u);
}

TEST(cli, plot_header_only_is_malformed) {
    auto csv = scratch("empty.csv");
    write(csv, "# cvqkd-thresholds v1 va=10\ndelta,eta_clone,eta_anticlone,eta_bma,eta_opt,eta_intercept_resend\n");
    Result r = run({"plot", "--in", csv.string(), "--out", scratch("empty.svg").string()});
    EXPECT_EQ(r.code, cli::kMalformedInput);
    EXPECT_NE(r.err.find("line 3"), std::string::npos);
}

TEST(cli, io_errors) {
    EXPECT_EQ(run({"plot", "--in", scratch("does_not_exist.csv").string(), "--out", "-"}).code, cli::kIo);
    EXPECT_EQ(run({"thresholds", "--out", "/nonexistent_dir/x.csv"}).code, cli::kIo);
}
