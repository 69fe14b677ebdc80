// Copyright 2026 The minact Authors.
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//    http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

// Runs the built command-line binary and checks its file and exit-code
// contract.

#include <sys/wait.h>

#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <sstream>
#include <string>
#include <vector>

#include <gtest/gtest.h>
#include <json.hpp>

namespace {

namespace fs = std::filesystem;
using nlohmann::json;

class Cli : public ::testing::Test {
 protected:
  void SetUp() override {
    const auto* info = ::testing::UnitTest::GetInstance()->current_test_info();
    dir_ = fs::temp_directory_path() / (std::string("minact_cli_") + info->name());
    fs::remove_all(dir_);
    fs::create_directories(dir_);
  }
  void TearDown() override { fs::remove_all(dir_); }

  // Exit status of the CLI; stdout and stderr go to dir_/log.txt.
  int run(const std::string& args) {
    const std::string command = std::string(MINACT_CLI_PATH) + " " + args + " > " +
                                (dir_ / "log.txt").string() + " 2>&1";
    const int status = std::system(command.c_str());
    return WIFEXITED(status) ? WEXITSTATUS(status) : -1;
  }

  std::string log() const { return slurp(dir_ / "log.txt"); }

  static std::string slurp(const fs::path& path) {
    std::ifstream in(path, std::ios::binary);
    std::ostringstream out;
    out << in.rdbuf();
    return out.str();
  }

  static std::vector<std::string> lines(const fs::path& path) {
    std::istringstream in(slurp(path));
    std::vector<std::string> out;
    for (std::string line; std::getline(in, line);) out.push_back(line);
    return out;
  }

  std::string out_flag() const { return "--out " + dir_.string(); }

  fs::path dir_;
};

TEST_F(Cli, RampLzAction) {
  ASSERT_EQ(run("ramp --model lz --protocol action --g0 -10 --delta 1 " + out_flag()), 0) << log();
  const auto rows = lines(dir_ / "ramp_lz_action.csv");
  ASSERT_EQ(rows.size(), 1002u);
  EXPECT_EQ(rows.front(), "s,g");
  EXPECT_EQ(rows[1], "0,-10");
  EXPECT_EQ(rows.back(), "1,10");
}

TEST_F(Cli, RampFcCriticalExponentProtocol) {
  ASSERT_EQ(run("ramp --model fc --protocol garbe --g0 0.1 --gtau 0.9 --points 5 " + out_flag()),
            0)
      << log();
  const auto rows = lines(dir_ / "ramp_fc_garbe.csv");
  ASSERT_EQ(rows.size(), 6u);
  EXPECT_EQ(rows[1], "0,0.1");
  EXPECT_EQ(rows.back(), "1,0.9");
}

TEST_F(Cli, RampIsingActionEndsAtTwo) {
  ASSERT_EQ(run("ramp --model ising --N 20 --protocol action --g0 0 " + out_flag()), 0) << log();
  EXPECT_EQ(lines(dir_ / "ramp_ising_action.csv").back(), "1,2");
}

TEST_F(Cli, RampPrintsActionForTau) {
  ASSERT_EQ(run("ramp --model lz --protocol linear --tau 1 " + out_flag()), 0) << log();
  EXPECT_NE(log().find("action 3.92534393823"), std::string::npos) << log();
}

TEST_F(Cli, UsageErrorsExitTwo) {
  EXPECT_EQ(run(""), 2);
  EXPECT_EQ(run("ramp --bogus 1 " + out_flag()), 2);
  EXPECT_EQ(run("evolve --model lz"), 2);
  EXPECT_NE(log().find("--tau"), std::string::npos);
  EXPECT_EQ(run("ramp --model ising --N 7 " + out_flag()), 2);
  EXPECT_EQ(run("ramp --model lz --protocol garbe " + out_flag()), 2);
  EXPECT_EQ(run("ramp --model lz --delta -1 " + out_flag()), 2);
  EXPECT_EQ(run("ramp --model heisenberg " + out_flag()), 2);
  EXPECT_EQ(run("evolve --model lz --tau -3"), 2);
  // Nothing was written by the failed invocations.
  EXPECT_EQ(std::distance(fs::directory_iterator(dir_), fs::directory_iterator()), 1);
}

TEST_F(Cli, EvolvePrintsFidelity) {
  ASSERT_EQ(run("evolve --model lz --protocol action --tau 50"), 0) << log();
  EXPECT_NE(log().find("fidelity 0.99"), std::string::npos) << log();
  EXPECT_NE(log().find("converged true"), std::string::npos);
}

TEST_F(Cli, UnconvergedEvolutionExitsThree) {
  EXPECT_EQ(run("evolve --model lz --protocol linear --tau 100 --steps 100"), 3) << log();
  EXPECT_NE(log().find("converged false"), std::string::npos);
}

TEST_F(Cli, SweepFromConfig) {
  const fs::path config = dir_ / "spec.json";
  std::ofstream(config) << R"({"model": "lz", "delta": 1, "protocols": ["linear"],
                               "tau": {"min": 1, "max": 10, "points": 3},
                               "output": "runs/lz.csv"})";
  ASSERT_EQ(run("sweep --config " + config.string() + " " + out_flag()), 0) << log();
  const auto rows = lines(dir_ / "runs" / "lz.csv");
  ASSERT_EQ(rows.size(), 4u);
  EXPECT_EQ(rows.front(), "tau,protocol,fidelity,norm_drift,steps,action");
  const json meta = json::parse(slurp(dir_ / "runs" / "lz.json"));
  EXPECT_EQ(meta.at("model"), "lz");
  EXPECT_EQ(meta.at("tau").at("points"), 3);
}

TEST_F(Cli, SweepRejectsOutputOutsideDirectory) {
  const fs::path config = dir_ / "spec.json";
  std::ofstream(config) << R"({"model": "lz", "output": "/tmp/escape.csv"})";
  EXPECT_EQ(run("sweep --config " + config.string() + " " + out_flag()), 2);
  std::ofstream(config) << R"({"model": "lz", "output": "../escape.csv"})";
  EXPECT_EQ(run("sweep --config " + config.string() + " " + out_flag()), 2);
  EXPECT_EQ(run("sweep --config " + (dir_ / "missing.json").string()), 2);
}

TEST_F(Cli, SweepFlagsOverrideDefaults) {
  ASSERT_EQ(run("sweep --model ising --N 8 --protocol linear --protocol action --tau-min 1 "
                "--tau-max 4 --points 2 --threads 2 " + out_flag()),
            0)
      << log();
  EXPECT_EQ(lines(dir_ / "sweep_ising.csv").size(), 5u);
  const json meta = json::parse(slurp(dir_ / "sweep_ising.json"));
  EXPECT_DOUBLE_EQ(meta.at("tau_l").get<double>(), 2.0);
}

TEST_F(Cli, FiguresAreCompleteAndDeterministic) {
  const std::vector<std::string> panels = {"lz",           "ising_N20",  "ising_N30",
                                           "ising_N60",    "fc_eta10",   "fc_eta100"};
  const std::vector<std::string> profiles = {"profile_lz_linear", "profile_lz_action",
                                             "profile_fc_linear", "profile_fc_action",
                                             "profile_fc_garbe"};
  const fs::path first = dir_ / "first";
  const fs::path second = dir_ / "second";
  ASSERT_EQ(run("figures --points 3 --out " + first.string()), 0) << log();
  ASSERT_EQ(run("figures --points 3 --out " + second.string()), 0) << log();

  for (const auto& name : panels) {
    for (const char* ext : {".csv", ".json"}) {
      const fs::path a = first / (name + ext);
      ASSERT_TRUE(fs::exists(a)) << a;
      EXPECT_GT(fs::file_size(a), 0u);
      EXPECT_EQ(slurp(a), slurp(second / (name + ext))) << name << ext;
    }
  }
  for (const auto& name : profiles) {
    EXPECT_EQ(slurp(first / (name + ".csv")), slurp(second / (name + ".csv"))) << name;
  }

  for (int sites : {20, 30, 60}) {
    const json meta =
        json::parse(slurp(first / ("ising_N" + std::to_string(sites) + ".json")));
    EXPECT_NEAR(meta.at("tau_l").get<double>(), sites / 4.0, 1e-12);
    EXPECT_NEAR(meta.at("tau_a").get<double>(), 1.0 / (4.0 * std::sin(M_PI / sites)), 1e-12);
  }
  const json lz = json::parse(slurp(first / "lz.json"));
  EXPECT_TRUE(lz.at("tau_l").is_null());
  EXPECT_EQ(lines(first / "lz.csv").size(), 7u);
}

}  // namespace
