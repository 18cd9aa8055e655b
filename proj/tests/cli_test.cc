// Copyright 2026 The listpriv Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include "cli.h"

#include <cmath>
#include <filesystem>
#include <fstream>
#include <sstream>

#include <gtest/gtest.h>

#include "listpriv/error.h"
#include "listpriv/io.h"

namespace listpriv::cli {
namespace {

struct Result {
  int code;
  std::string out;
  std::string err;
};

Result run_cli(std::vector<std::string> args) {
  std::ostringstream out, err;
  const int code = run(args, out, err);
  return {code, out.str(), err.str()};
}

class CliTest : public ::testing::Test {
 protected:
  void SetUp() override {
    dir_ = std::filesystem::temp_directory_path() /
           ("listpriv_cli_" + std::string(::testing::UnitTest::GetInstance()->current_test_info()->name()));
    std::filesystem::create_directories(dir_);
  }
  void TearDown() override { std::filesystem::remove_all(dir_); }

  std::string write(const std::string& name, const std::string& text) {
    const auto path = (dir_ / name).string();
    std::ofstream(path) << text;
    return path;
  }

  // Writes the mechanism produced by `args` to a file and returns its path.
  std::string mechanism(const std::string& name, std::vector<std::string> args) {
    const auto path = (dir_ / name).string();
    args.insert(args.begin(), "mechanism");
    args.push_back("--output");
    args.push_back(path);
    const Result r = run_cli(args);
    EXPECT_EQ(r.code, 0) << r.err;
    return path;
  }

  std::filesystem::path dir_;
};

TEST_F(CliTest, Validate) {
  const Result r = run_cli({"validate", "fig1"});
  EXPECT_EQ(r.code, 0);
  EXPECT_EQ(r.out, "r=7 k=2 l=3, preimages [3,4]\n");

  const auto file = write("fig1.json", R"({"pmf": ["0.3","0.2","0.15","0.1","0.1","0.1","0.05"], "f": [0,0,0,1,1,1,1], "l": 3})");
  EXPECT_EQ(run_cli({"validate", file}).out, "r=7 k=2 l=3, preimages [3,4]\n");

  const auto short_pmf = write("bad.json", R"({"pmf": ["0.5", "0.49"], "f": [0, 1], "l": 1})");
  const Result bad = run_cli({"validate", short_pmf});
  EXPECT_EQ(bad.code, 1);
  EXPECT_NE(bad.err.find("error[PmfNotNormalized]"), std::string::npos) << bad.err;

  const auto range = write("range.json", R"({"pmf": ["0.5", "0.5"], "f": [0, 2], "l": 1, "k": 2})");
  EXPECT_NE(run_cli({"validate", range}).err.find("error[BadFunctionRange]"), std::string::npos);

  EXPECT_NE(run_cli({"validate", "no-such-file"}).err.find("error[IoError]"), std::string::npos);
  EXPECT_EQ(run_cli({"frobnicate"}).code, 1);
}

TEST_F(CliTest, Curve) {
  const Result fig1 = run_cli({"curve", "fig1", "--format", "exact"});
  ASSERT_EQ(fig1.code, 0) << fig1.err;
  const Json j = parse_json_text(fig1.out);
  EXPECT_EQ(j["breakpoints"], Json::array({"3/5", "2/3", "3/4"}));
  EXPECT_EQ(j["segments"].size(), 4u);

  const Result u4 = run_cli({"curve", "uniform4", "--format", "csv"});
  EXPECT_EQ(u4.out, "rho_lo,rho_hi,slope,intercept,lambda_size\n0,1/2,0,1/2,2\n1/2,1,-1,1,0\n");

  const Result ce = run_cli({"curve", "counterexample", "--format", "csv"});
  EXPECT_EQ(ce.out, "rho_lo,rho_hi,slope,intercept,lambda_size\n0,1/3,0,3/5,2\n1/3,1/2,-3/5,4/5,1\n1/2,1,-1,1,0\n");

  const Result sampled = run_cli({"curve", "fig1", "--format", "csv", "--samples", "101"});
  EXPECT_EQ(std::count(sampled.out.begin(), sampled.out.end(), '\n'), 102);
}

TEST_F(CliTest, Mechanism) {
  const Result wo = run_cli({"mechanism", "fig1", "--kind", "optimal-binary", "--rho", "1/2"});
  ASSERT_EQ(wo.code, 0) << wo.err;
  const Json j = parse_json_text(wo.out);
  EXPECT_EQ(j["rows"][0], Json::array({"3/5", "2/5"}));
  EXPECT_EQ(j["rows"][6], Json::array({"2/5", "3/5"}));

  const Json det = parse_json_text(run_cli({"mechanism", "uniform4", "--kind", "deterministic"}).out);
  EXPECT_EQ(det["rows"], Json::parse(R"([["1","0"],["1","0"],["0","1"],["0","1"]])"));

  const Json ce = parse_json_text(run_cli({"mechanism", "counterexample", "--kind", "counterexample", "--rho", "3/4"}).out);
  EXPECT_EQ(ce["rows"], Json::parse(R"([["3/4","1/4","0"],["3/4","1/4","0"],["1/4","3/4","0"],["1/4","3/4","0"],["1/8","1/8","3/4"]])"));

  EXPECT_NE(run_cli({"mechanism", "counterexample", "--kind", "optimal-binary", "--rho", "1/2"}).err.find("NotBinaryFunction"),
            std::string::npos);
  EXPECT_NE(run_cli({"mechanism", "fig1", "--kind", "optimal-binary", "--rho", "1.5"}).err.find("RhoOutOfRange"),
            std::string::npos);

  const auto noise = write("noise.json", R"({"noise": [["3/4", "1/4"], ["3/4", "1/4"]]})");
  const Json noisy = parse_json_text(run_cli({"mechanism", "uniform4", "--kind", "noise-file", "--noise", noise}).out);
  EXPECT_EQ(noisy["rows"][2], Json::array({"1/4", "3/4"}));
}

TEST_F(CliTest, Eval) {
  const auto w0 = mechanism("w0.json", {"fig1", "--kind", "uniform"});
  const Json uniform = parse_json_text(run_cli({"eval", "fig1", "--mechanism", w0, "--rho", "1/2"}).out);
  EXPECT_EQ(uniform["privacy"], "7/20");
  EXPECT_EQ(uniform["gap"], "0");
  EXPECT_EQ(uniform["recoverable"], true);

  const auto wo = mechanism("wo.json", {"fig1", "--kind", "optimal-binary", "--rho", "7/10"});
  const Json optimal = parse_json_text(run_cli({"eval", "fig1", "--mechanism", wo, "--rho", "0.7"}).out);
  EXPECT_EQ(optimal["privacy"], "63/200");
  EXPECT_EQ(optimal["gap"], "0");

  const auto wce = mechanism("wce.json", {"counterexample", "--kind", "counterexample", "--rho", "3/5"});
  const Json ce = parse_json_text(run_cli({"eval", "counterexample", "--mechanism", wce, "--rho", "3/5"}).out);
  EXPECT_EQ(ce["privacy"], "2/5");
  EXPECT_EQ(ce["gap"], "0");

  const Result mismatch = run_cli({"eval", "uniform4", "--mechanism", w0});
  EXPECT_EQ(mismatch.code, 1);
  EXPECT_NE(mismatch.err.find("error[HashMismatch]"), std::string::npos);
}

TEST_F(CliTest, Oracle) {
  const Result grid = run_cli({"oracle", "fig1", "--grid", "11"});
  ASSERT_EQ(grid.code, 0) << grid.err;
  std::istringstream lines(grid.out);
  std::string line;
  std::getline(lines, line);
  int rows = 0;
  while (std::getline(lines, line)) {
    ++rows;
    EXPECT_NE(line.find(",true,"), std::string::npos) << line;
  }
  EXPECT_EQ(rows, 11);

  const Json ce = parse_json_text(run_cli({"oracle", "counterexample", "--rho", "3/4"}).out);
  EXPECT_EQ(ce["optimum"], "1/4");
  EXPECT_EQ(ce["equal"], true);

  EXPECT_EQ(parse_json_text(run_cli({"oracle", "fig1", "--rho", "0"}).out)["optimum"], "7/20");

  const auto lp = (dir_ / "fig1.lp").string();
  EXPECT_EQ(run_cli({"oracle", "fig1", "--rho", "1/2", "--lp-dump", lp}).code, 0);
  EXPECT_TRUE(std::filesystem::exists(lp));

  ::setenv("LISTPRIV_ORACLE_CAP", "5", 1);
  EXPECT_NE(run_cli({"oracle", "fig1", "--rho", "1/2"}).err.find("error[InstanceTooLarge]"), std::string::npos);
  ::unsetenv("LISTPRIV_ORACLE_CAP");
}

TEST_F(CliTest, Simulate) {
  const auto wo = mechanism("wo.json", {"fig1", "--kind", "optimal-binary", "--rho", "3/4"});
  const std::vector<std::string> args{"simulate", "fig1", "--mechanism", wo, "--trials", "1000000", "--seed", "42"};
  const Result first = run_cli(args);
  ASSERT_EQ(first.code, 0) << first.err;
  const Json j = parse_json_text(first.out);
  EXPECT_EQ(j["exact_privacy"], "23/80");
  EXPECT_LE(std::abs(j["empirical_privacy"].get<double>() - 0.2875), 5 * j["std_error"].get<double>());
  EXPECT_EQ(run_cli(args).out, first.out);

  const auto w1 = mechanism("w1.json", {"uniform4", "--kind", "deterministic"});
  const Json det = parse_json_text(
      run_cli({"simulate", "uniform4", "-l", "3", "--mechanism", w1, "--trials", "100000", "--seed", "7"}).out);
  EXPECT_EQ(det["misses"], 0);

  EXPECT_EQ(run_cli({"simulate", "fig1", "--mechanism", wo, "--trials", "10"}).code, 1);

  const Result sweep = run_cli({"simulate", "fig1", "--sweep", "5", "--trials", "20000", "--seed", "3"});
  ASSERT_EQ(sweep.code, 0) << sweep.err;
  EXPECT_EQ(sweep.out.substr(0, sweep.out.find('\n')), "rho,empirical,analytic,error,std_error");
}

}  // namespace
}  // namespace listpriv::cli
