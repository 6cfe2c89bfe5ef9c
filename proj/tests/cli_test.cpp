// Copyright 2026 The nlasim Authors
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

#include <sys/wait.h>

#include <cstdlib>
#include <fstream>
#include <sstream>
#include <string>

#include <gtest/gtest.h>

#include "json.hpp"

namespace {

std::string temp(const std::string& name) { return ::testing::TempDir() + "cli_test_" + name; }

std::string write(const std::string& name, const std::string& text) {
  const std::string path = temp(name);
  std::ofstream(path) << text;
  return path;
}

std::string slurp(const std::string& path) {
  std::ifstream in(path);
  std::stringstream s;
  s << in.rdbuf();
  return s.str();
}

int sim(const std::string& args, const std::string& env = "") {
  const std::string cmd = env + " " + SIM_BINARY + " " + args + " >" + temp("stdout") + " 2>" + temp("stderr");
  const int status = std::system(cmd.c_str());
  return WIFEXITED(status) ? WEXITSTATUS(status) : -1;
}

TEST(Cli, WritesCsvToStdout) {
  const std::string cfg = write("epr.cfg", "chi = 0.3\n");
  ASSERT_EQ(sim("epr --config " + cfg), 0);
  const std::string out = slurp(temp("stdout"));
  EXPECT_NE(out.find("# chi_prime = 0.6"), std::string::npos);
  EXPECT_NE(out.find("n,amplitude_in,amplitude_out,ratio_out"), std::string::npos);
}

TEST(Cli, JsonFormatFromFlagAndExtension) {
  const std::string cfg = write("bound.cfg", "alphas = 0.1, 0.2\nn_stages = 1\n");
  ASSERT_EQ(sim("bound --config " + cfg + " --format json"), 0);
  EXPECT_EQ(nlohmann::json::parse(slurp(temp("stdout")))["rows"].size(), 2u);
  const std::string out = temp("bound.json");
  ASSERT_EQ(sim("bound --config " + cfg + " --out " + out), 0);
  EXPECT_EQ(nlohmann::json::parse(slurp(out))["experiment"], "bound");
  ASSERT_EQ(sim("bound --config " + cfg + " --out " + temp("bound.txt")), 0);
  EXPECT_EQ(slurp(temp("bound.txt")).rfind("# configurations = 2", 0), 0u);
}

TEST(Cli, ThreadCountDoesNotChangeOutput) {
  const std::string cfg = write("vt.cfg", "tau_points = 21\n");
  ASSERT_EQ(sim("vis-tau --config " + cfg + " --out " + temp("t1.csv"), "SIM_THREADS=1"), 0);
  ASSERT_EQ(sim("vis-tau --config " + cfg + " --out " + temp("t4.csv"), "SIM_THREADS=4"), 0);
  EXPECT_EQ(slurp(temp("t1.csv")), slurp(temp("t4.csv")));
  ASSERT_EQ(sim("vis-tau --config " + cfg + " --out " + temp("t1b.csv"), "SIM_THREADS=1"), 0);
  EXPECT_EQ(slurp(temp("t1.csv")), slurp(temp("t1b.csv")));
  EXPECT_NE(slurp(temp("stdout")).find("argmax_tau"), std::string::npos);
  EXPECT_FALSE(slurp(temp("t1.csv")).empty());
}

TEST(Cli, ConfigErrorsExitWithTwo) {
  EXPECT_EQ(sim("epr --config " + write("unknown.cfg", "chi = 0.3\nwhat = 1\n")), 2);
  EXPECT_NE(slurp(temp("stderr")).find("line 2"), std::string::npos);
  EXPECT_EQ(sim("epr --config " + write("range.cfg", "chi = 1.5\n")), 2);
  EXPECT_EQ(sim("epr --config " + temp("does_not_exist.cfg")), 2);
  EXPECT_EQ(sim("epr"), 2);
  EXPECT_EQ(sim("nosuch --config x"), 2);
  EXPECT_EQ(sim("epr --config " + write("ok.cfg", "") + " --format xml"), 2);
  EXPECT_EQ(sim("epr --config " + write("ok.cfg", ""), "SIM_THREADS=zero"), 2);
}

TEST(Cli, NumericalEnvelopeExitsWithThree) {
  EXPECT_EQ(sim("epr --config " + write("divergent.cfg", "chi = 0.6\ng = 2\n")), 3);
  EXPECT_NE(slurp(temp("stderr")).find("numerical"), std::string::npos);
}

}  // namespace
