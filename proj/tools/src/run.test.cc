// Copyright 2026 The Quantromon Toolkit Authors
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

#include "run.h"

#include <filesystem>
#include <fstream>
#include <sstream>

#include "gtest/gtest.h"
#include "json.hpp"

using namespace quantromon::cli;

namespace {

struct Outcome {
    int code;
    std::string out;
    std::string err;
};

Outcome invoke(std::vector<std::string> args) {
    args.insert(args.begin(), "quantromon");
    std::ostringstream out;
    std::ostringstream err;
    int code = run(args, out, err);
    return {code, out.str(), err.str()};
}

std::string config_path(const std::string &name) {
    return std::string(QUANTROMON_SOURCE_DIR) + "/configs/" + name;
}

std::string slurp(const std::filesystem::path &path) {
    std::ifstream in(path, std::ios::binary);
    std::ostringstream s;
    s << in.rdbuf();
    return s.str();
}

class scratch_dir {
   public:
    explicit scratch_dir(const std::string &name)
        : path_(std::filesystem::temp_directory_path() / ("quantromon_" + name)) {
        std::filesystem::remove_all(path_);
        std::filesystem::create_directories(path_);
    }
    ~scratch_dir() {
        std::filesystem::remove_all(path_);
    }
    std::string operator/(const std::string &leaf) const {
        return (path_ / leaf).string();
    }

   private:
    std::filesystem::path path_;
};

std::vector<std::string> lines(const std::string &text) {
    std::vector<std::string> out;
    std::istringstream in(text);
    for (std::string l; std::getline(in, l);) {
        out.push_back(l);
    }
    return out;
}

}  // namespace

TEST(run, energies_default_circuit) {
    auto r = invoke({"energies"});
    ASSERT_EQ(r.code, kExitOk) << r.err;
    auto l = lines(r.out);
    ASSERT_EQ(l.size(), 2u);
    EXPECT_EQ(l[0], "e_j,e_lr,e_cq,e_cr,e_jq,e_jr,e_jsigma,b,d_j,inductive_ratio");
    EXPECT_EQ(l[1].rfind("19934330830.09526", 0), 0u) << l[1];
}

TEST(run, spectrum_table_one) {
    auto r = invoke({"spectrum", "--config", config_path("table_one.yaml"), "--format", "json"});
    ASSERT_EQ(r.code, kExitOk) << r.err;
    auto doc = nlohmann::json::parse(r.out);
    EXPECT_EQ(doc["command"], "spectrum");
    bool seen = false;
    for (const auto &row : doc["rows"]) {
        if (row["quantity"] == "two_chi") {
            EXPECT_LT(std::abs(row["rel_delta"].get<double>()), 0.10);
            seen = true;
        }
    }
    EXPECT_TRUE(seen);
}

TEST(run, spectrum_truncation_flag) {
    auto a = invoke({"spectrum", "--trunc", "10x10"});
    auto b = invoke({"spectrum", "--trunc", "12x12"});
    ASSERT_EQ(a.code, kExitOk);
    EXPECT_NE(a.out, b.out);
    EXPECT_EQ(invoke({"spectrum", "--trunc", "12"}).code, kExitValidation);
    EXPECT_EQ(invoke({"spectrum", "--trunc", "3x12"}).code, kExitValidation);
    EXPECT_EQ(invoke({"spectrum", "--trunc", "12x12x"}).code, kExitValidation);
}

TEST(run, invalid_b_exits_one) {
    scratch_dir dir("invalid_b");
    std::ofstream(dir / "bad.yaml") << "circuit:\n  b: 1.2\n";
    auto r = invoke({"energies", "--config", dir / "bad.yaml"});
    EXPECT_EQ(r.code, kExitValidation);
    EXPECT_NE(r.err.find("circuit.b"), std::string::npos) << r.err;
    EXPECT_NE(r.err.find(":2:"), std::string::npos) << r.err;
    EXPECT_TRUE(r.out.empty());
}

TEST(run, usage_errors_exit_one) {
    EXPECT_EQ(invoke({}).code, kExitValidation);
    EXPECT_EQ(invoke({"bogus"}).code, kExitValidation);
    EXPECT_EQ(invoke({"energies", "--format", "xml"}).code, kExitValidation);
    EXPECT_EQ(invoke({"energies", "--config", "/nonexistent.yaml"}).code, kExitValidation);
    EXPECT_EQ(invoke({"energies", "--out", "/nonexistent/dir/out.csv"}).code, kExitValidation);
    EXPECT_EQ(invoke({"readout-fit"}).code, kExitValidation);
    EXPECT_EQ(invoke({"readout-fit", "--shots0", "/nonexistent0", "--shots1", "/nonexistent1"}).code, kExitValidation);
    EXPECT_EQ(invoke({"readout-sim", "--shots", "0"}).code, kExitValidation);
    EXPECT_EQ(invoke({"--help"}).code, kExitOk);
}

TEST(run, numerical_failure_exits_two) {
    scratch_dir dir("numerical");
    std::ofstream(dir / "fit.yaml") << "flux:\n  mode: one_squid\n"
                                       "  fit: {omega_q_zero: 5.205e9, d_j_zero: -0.3, anchor_n: 5, anchor_d_j: -0.5}\n";
    auto r = invoke({"chi-sweep", "--config", dir / "fit.yaml"});
    EXPECT_EQ(r.code, kExitNumerical);
    EXPECT_NE(r.err.find("numerical failure"), std::string::npos) << r.err;
}

TEST(run, sweep_rows_and_failed_points) {
    auto r = invoke({"chi-sweep", "--config", config_path("sample_a.yaml")});
    ASSERT_EQ(r.code, kExitOk) << r.err;
    EXPECT_EQ(lines(r.out).size(), 11u);

    scratch_dir dir("sweep_fail");
    std::ofstream(dir / "half.yaml") << "flux: {mode: both_squids, area_ratio_a: 0.25, n: [0, 2]}\n";
    r = invoke({"t1-model", "--config", dir / "half.yaml"});
    EXPECT_EQ(r.code, kExitOk);
    auto l = lines(r.out);
    ASSERT_EQ(l.size(), 3u);
    EXPECT_EQ(l[2].rfind("2,false,", 0), 0u) << l[2];
    EXPECT_NE(r.err.find("n = 2"), std::string::npos);
}

TEST(run, phase_sample_c) {
    auto r = invoke({"phase", "--config", config_path("sample_c.yaml")});
    ASSERT_EQ(r.code, kExitOk);
    auto l = lines(r.out);
    ASSERT_EQ(l.size(), 2u);
    EXPECT_EQ(l[1].rfind("1370000,900000,380000,232.3", 0), 0u) << l[1];
}

TEST(run, readout_fit_round_trip) {
    scratch_dir dir("round_trip");
    auto sim = invoke({"readout-sim", "--shots", "5000", "--seed", "17", "--shots0", dir / "s0.csv", "--shots1",
                       dir / "s1.csv", "--out", dir / "sim.csv"});
    ASSERT_EQ(sim.code, kExitOk) << sim.err;
    auto fit = invoke({"readout-fit", "--shots0", dir / "s0.csv", "--shots1", dir / "s1.csv", "--out", dir / "fit.csv"});
    ASSERT_EQ(fit.code, kExitOk) << fit.err;
    EXPECT_EQ(slurp(dir / "sim.csv"), slurp(dir / "fit.csv"));
    // Swapped files are rejected rather than silently inverting the report.
    EXPECT_EQ(invoke({"readout-fit", "--shots0", dir / "s1.csv", "--shots1", dir / "s0.csv"}).code, kExitValidation);
}

TEST(run, reruns_are_byte_identical) {
    scratch_dir dir("determinism");
    for (const char *tag : {"a", "b"}) {
        auto r = invoke({"readout-sim", "--config", config_path("sample_c.yaml"), "--shots", "3000", "--seed", "99",
                         "--shots0", dir / (std::string(tag) + "0.csv"), "--shots1", dir / (std::string(tag) + "1.csv"),
                         "--out", dir / (std::string(tag) + ".json"), "--format", "json"});
        ASSERT_EQ(r.code, kExitOk) << r.err;
    }
    EXPECT_EQ(slurp(dir / "a.json"), slurp(dir / "b.json"));
    EXPECT_EQ(slurp(dir / "a0.csv"), slurp(dir / "b0.csv"));
    EXPECT_EQ(slurp(dir / "a1.csv"), slurp(dir / "b1.csv"));
    auto other = invoke({"readout-sim", "--config", config_path("sample_c.yaml"), "--shots", "3000", "--seed", "100"});
    auto same = invoke({"readout-sim", "--config", config_path("sample_c.yaml"), "--shots", "3000", "--seed", "99"});
    EXPECT_NE(other.out, same.out);
}

TEST(run, readout_sim_tau_table) {
    auto r = invoke({"readout-sim", "--config", config_path("sample_c.yaml"), "--shots", "4000"});
    ASSERT_EQ(r.code, kExitOk) << r.err;
    auto l = lines(r.out);
    ASSERT_EQ(l.size(), 8u);
    EXPECT_EQ(l[0], "tau,threshold,p01,p10,fidelity,eps_id,eps_01,eps_10,degenerate");
}

TEST(run, infinite_t1_serializes) {
    scratch_dir dir("inf");
    std::ofstream(dir / "c.yaml") << "readout: {t1: .inf}\n";
    auto r = invoke({"t1-model", "--format", "json"});
    ASSERT_EQ(r.code, kExitOk);
    // Symmetric junctions: no asymmetry Purcell channel.
    auto doc = nlohmann::json::parse(r.out);
    EXPECT_EQ(doc["rows"][0]["t1_asymm"], "inf");
    auto sim = invoke({"readout-sim", "--config", dir / "c.yaml", "--shots", "500", "--shots1", dir / "s1.csv"});
    ASSERT_EQ(sim.code, kExitOk) << sim.err;
    EXPECT_NE(slurp(dir / "s1.csv").find("# t1=inf"), std::string::npos);
}
