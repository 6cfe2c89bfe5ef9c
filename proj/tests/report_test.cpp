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

#include <cmath>
#include <limits>
#include <sstream>
#include <stdexcept>

#include <gtest/gtest.h>

#include "json.hpp"
#include "nlasim/experiments.hpp"
#include "nlasim/report.hpp"

namespace nlasim {
namespace {

Report sample() {
  Report r{"demo", {}, {{"gain", 2.0 / 3}, {"count", 3LL}, {"ok", true}, {"label", std::string("x")}}};
  r.table.columns = {"a", "b", "c"};
  r.table.add_row({1.0 / 3, 7LL, std::monostate{}});
  r.table.add_row({-0.0, 12LL, std::string("d3")});
  return r;
}

std::vector<std::string> lines(const std::string& s) {
  std::vector<std::string> out;
  std::istringstream in(s);
  for (std::string line; std::getline(in, line);) out.push_back(line);
  return out;
}

TEST(FormatReal, TwelveSignificantDigits) {
  EXPECT_EQ(format_real(1.0 / 3), "0.333333333333");
  EXPECT_EQ(format_real(2.0), "2");
  EXPECT_EQ(format_real(123456789.123456), "123456789.123");
  EXPECT_EQ(format_real(1.5e-17), "1.5e-17");
  EXPECT_EQ(format_real(-0.0), "0");
  EXPECT_EQ(format_real(std::numeric_limits<double>::infinity()), "inf");
  EXPECT_EQ(format_real(-std::numeric_limits<double>::infinity()), "-inf");
  EXPECT_EQ(format_real(std::nan("")), "nan");
}

TEST(FormatCell, AllAlternatives) {
  EXPECT_EQ(format_cell(std::monostate{}), "");
  EXPECT_EQ(format_cell(42LL), "42");
  EXPECT_EQ(format_cell(true), "true");
  EXPECT_EQ(format_cell(std::string("s")), "s");
  EXPECT_EQ(format_cell(0.5), "0.5");
}

TEST(Table, RejectsRowsOfWrongWidth) {
  Table t;
  t.columns = {"a", "b"};
  EXPECT_THROW(t.add_row({1.0}), std::invalid_argument);
}

TEST(Csv, SummaryThenHeaderThenRows) {
  const auto l = lines(to_csv(sample()));
  ASSERT_EQ(l.size(), 7u);
  EXPECT_EQ(l[0], "# gain = 0.666666666667");
  EXPECT_EQ(l[1], "# count = 3");
  EXPECT_EQ(l[2], "# ok = true");
  EXPECT_EQ(l[3], "# label = x");
  EXPECT_EQ(l[4], "a,b,c");
  EXPECT_EQ(l[5], "0.333333333333,7,");
  EXPECT_EQ(l[6], "0,12,d3");
}

TEST(Json, RoundTripsThroughParser) {
  const auto j = nlohmann::json::parse(to_json(sample()));
  EXPECT_EQ(j["experiment"], "demo");
  EXPECT_EQ(j["summary"]["gain"].get<double>(), 0.666666666667);
  EXPECT_EQ(j["summary"]["count"], 3);
  EXPECT_EQ(j["summary"]["ok"], true);
  EXPECT_EQ(j["columns"], nlohmann::json::array({"a", "b", "c"}));
  ASSERT_EQ(j["rows"].size(), 2u);
  EXPECT_EQ(j["rows"][0]["a"].get<double>(), 0.333333333333);
  EXPECT_TRUE(j["rows"][0]["c"].is_null());
  EXPECT_EQ(j["rows"][1]["c"], "d3");
}

TEST(Json, NonFiniteValuesBecomeStrings) {
  Report r{"x", {}, {{"v", std::numeric_limits<double>::infinity()}}};
  const auto j = nlohmann::json::parse(to_json(r));
  EXPECT_EQ(j["summary"]["v"], "inf");
}

TEST(TextSummary, ListsEveryKey) {
  const std::string s = to_text_summary(sample());
  for (const char* key : {"demo", "gain", "count", "ok", "label"}) EXPECT_NE(s.find(key), std::string::npos) << key;
}

TEST(ParallelMap, PreservesOrderAndRethrowsLowestIndex) {
  const std::function<int(int)> square = [](int i) { return i * i; };
  const auto v = parallel_map<int>(50, 4, square);
  for (int i = 0; i < 50; ++i) EXPECT_EQ(v[i], i * i);
  const std::function<int(int)> failing = [](int i) -> int {
    if (i == 7 || i == 31) throw std::runtime_error(std::to_string(i));
    return i;
  };
  try {
    parallel_map<int>(40, 4, failing);
    FAIL() << "expected an exception";
  } catch (const std::runtime_error& e) {
    EXPECT_STREQ(e.what(), "7");
  }
  EXPECT_TRUE(parallel_map<int>(0, 4, square).empty());
}

class Experiments : public ::testing::TestWithParam<std::string> {};

TEST_P(Experiments, OutputIsDeterministicAndThreadIndependent) {
  const Config c = Config::defaults(experiment_schema(GetParam()));
  const std::string one = to_csv(run_experiment(GetParam(), c, 1));
  EXPECT_EQ(one, to_csv(run_experiment(GetParam(), c, 1)));
  EXPECT_EQ(one, to_csv(run_experiment(GetParam(), c, 4)));
  EXPECT_NO_THROW(nlohmann::json::parse(to_json(run_experiment(GetParam(), c, 2))));
}

INSTANTIATE_TEST_SUITE_P(All, Experiments, ::testing::ValuesIn(experiment_names()),
                         [](const auto& info) {
                           std::string n = info.param;
                           for (char& ch : n)
                             if (ch == '-') ch = '_';
                           return n;
                         });

TEST(ExperimentResults, Headlines) {
  const auto summary_value = [](const Report& r, const std::string& key) {
    for (const auto& [k, v] : r.summary)
      if (k == key) return v;
    throw std::out_of_range(key);
  };
  const Report vt = run_experiment("vis-tau", Config::parse("eta = 1/5\nsigma = 0.5\n", experiment_schema("vis-tau")));
  EXPECT_NEAR(std::get<double>(summary_value(vt, "argmax_tau")), 0.8, 1e-12);
  const Report epr = run_experiment("epr", Config::defaults(experiment_schema("epr")));
  EXPECT_NEAR(std::get<double>(summary_value(epr, "chi_prime")), 0.6, 1e-12);
  const Report bound = run_experiment("bound", Config::defaults(experiment_schema("bound")));
  EXPECT_TRUE(std::get<bool>(summary_value(bound, "all_within_bound")));
  const Report unit = run_experiment("bound", Config::parse("gains = 1\n", experiment_schema("bound")));
  for (const auto& row : unit.table.rows) EXPECT_EQ(std::get<double>(row[3]), 1.0);
  const Report fringe = run_experiment("fringe", Config::defaults(experiment_schema("fringe")));
  EXPECT_NEAR(std::get<double>(summary_value(fringe, "D2_visibility")), 1.0, 1e-6);
  EXPECT_NEAR(std::get<double>(summary_value(fringe, "D3_visibility")), 1.0, 1e-6);
  const Report t1 = run_experiment("table1", Config::defaults(experiment_schema("table1")));
  ASSERT_EQ(t1.table.rows.size(), 4u);
  for (std::size_t i = 0; i < 3; ++i)
    EXPECT_NEAR(std::get<double>(t1.table.rows[i][2]), std::get<double>(t1.table.rows[i][1]), 1e-9);
  EXPECT_NEAR(std::get<double>(t1.table.rows[0][3]), 1.9704, 1e-4);
  EXPECT_EQ(std::get<double>(t1.table.rows[3][1]), 1.0);
  EXPECT_NEAR(std::get<double>(t1.table.rows[3][6]), 1.0, 1e-9);
}

}  // namespace
}  // namespace nlasim
