// Copyright 2026 The subqubo Authors
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

#include "subqubo/harness.hpp"

#include <gtest/gtest.h>

#include <algorithm>
#include <cmath>
#include <random>
#include <sstream>

#include "subqubo/error.hpp"

namespace subqubo {
namespace {

std::string strip_last_column(const std::string& csv) {
  std::istringstream in(csv);
  std::string line, out;
  while (std::getline(in, line)) out += line.substr(0, line.rfind(',')) + "\n";
  return out;
}

std::size_t line_count(const std::string& text) {
  return static_cast<std::size_t>(std::count(text.begin(), text.end(), '\n'));
}

TEST(BoxplotTest, SaturatedOutlierLeavesMedian) {
  const auto b = boxplot_stats({0, 0, 120}, 50);
  EXPECT_DOUBLE_EQ(b.median, 0.0);
  EXPECT_DOUBLE_EQ(b.max, 50.0);
  EXPECT_EQ(b.saturated, (std::vector<double>{0, 0, 50}));
  EXPECT_EQ(b.original, (std::vector<double>{0, 0, 120}));
}

TEST(BoxplotTest, SingleValue) {
  const auto b = boxplot_stats({7}, 50);
  for (double v : {b.min, b.q1, b.median, b.q3, b.max}) EXPECT_DOUBLE_EQ(v, 7.0);
}

TEST(BoxplotTest, FivePointQuartiles) {
  const auto b = boxplot_stats({5, 3, 1, 4, 2}, 50);
  EXPECT_DOUBLE_EQ(b.min, 1.0);
  EXPECT_DOUBLE_EQ(b.q1, 2.0);
  EXPECT_DOUBLE_EQ(b.median, 3.0);
  EXPECT_DOUBLE_EQ(b.q3, 4.0);
  EXPECT_DOUBLE_EQ(b.max, 5.0);
}

TEST(BoxplotTest, InterpolatesBetweenOrderStatistics) {
  EXPECT_DOUBLE_EQ(quantile({1, 2, 3, 4}, 0.5), 2.5);
  EXPECT_DOUBLE_EQ(quantile({10, 0}, 0.25), 2.5);
}

TEST(BoxplotTest, SaturationIsIdempotent) {
  std::mt19937_64 gen(3);
  std::uniform_int_distribution<int> dist(0, 200);
  for (int trial = 0; trial < 50; ++trial) {
    std::vector<double> d(1 + trial % 9);
    for (double& v : d) v = dist(gen);
    const auto once = boxplot_stats(d, 50);
    const auto twice = boxplot_stats(once.saturated, 50);
    EXPECT_EQ(once.saturated, twice.saturated);
    EXPECT_DOUBLE_EQ(once.median, twice.median);
    EXPECT_LE(once.max, 50.0);
    EXPECT_LE(once.q1, once.median);
    EXPECT_LE(once.median, once.q3);
  }
}

TEST(BoxplotTest, EmptyInputThrows) { EXPECT_THROW(boxplot_stats({}, 50), InvalidArgument); }

TEST(FitTest, RecoversExactExponential) {
  std::vector<std::pair<double, double>> pts;
  for (double x : {8.0, 16.0, 32.0, 64.0, 128.0}) pts.emplace_back(x, 0.002 * std::exp(x / 40.0));
  const auto fit = fit_exponential(pts);
  EXPECT_NEAR(fit.a, 0.002, 0.002 * 0.01);
  EXPECT_NEAR(fit.b, 40.0, 40.0 * 0.01);
  ASSERT_EQ(fit.residuals.size(), pts.size());
  for (double r : fit.residuals) EXPECT_NEAR(r, 0.0, 1e-9);
}

TEST(FitTest, RecoversLargeScaleConstant) {
  std::vector<std::pair<double, double>> pts;
  for (double x = 100; x <= 1000; x += 100) pts.emplace_back(x, 2.0 * std::exp(x / 340.0));
  const auto fit = fit_exponential(pts);
  EXPECT_NEAR(fit.a, 2.0, 0.02);
  EXPECT_NEAR(fit.b, 340.0, 3.4);
}

TEST(FitTest, ToleratesLogNormalNoise) {
  std::mt19937_64 gen(11);
  std::normal_distribution<double> noise(0.0, 0.05);
  std::vector<std::pair<double, double>> pts;
  for (double x = 8; x <= 256; x += 8) pts.emplace_back(x, 0.01 * std::exp(x / 60.0 + noise(gen)));
  const auto fit = fit_exponential(pts);
  EXPECT_NEAR(fit.b, 60.0, 6.0);
  EXPECT_NEAR(fit.a, 0.01, 0.001);
}

TEST(FitTest, DegenerateInputsThrow) {
  EXPECT_THROW(fit_exponential({{8, 1}, {16, 2}}), InvalidArgument);
  EXPECT_THROW(fit_exponential({{8, 1}, {16, 0}, {32, 2}}), InvalidArgument);
  EXPECT_THROW(fit_exponential({{8, 1}, {8, 2}, {8, 3}}), InvalidArgument);
  EXPECT_THROW(fit_exponential({{8, 0.5}, {16, 0.5}, {32, 0.5}}), InvalidArgument);
}

TEST(FitTest, CsvHasFourParameters) {
  std::vector<std::pair<double, double>> pts{{1, 1}, {2, 2.7}, {3, 7.4}};
  std::ostringstream out;
  write_fit_csv(out, fit_exponential(pts));
  EXPECT_EQ(out.str().rfind("parameter,value\n", 0), 0U);
  EXPECT_EQ(line_count(out.str()), 5U);
}

TEST(PauseArmsTest, ControlFirstAndDeduplicated) {
  EXPECT_EQ(pause_arms({10, 40, 40, 0}), (std::vector<double>{0, 10, 40}));
  EXPECT_EQ(pause_arms({0}), (std::vector<double>{0}));
  EXPECT_EQ(pause_arms({}), (std::vector<double>{0}));
}

ExperimentConfig small_config() {
  ExperimentConfig c;
  c.sizes = {8, 12};
  c.datasets_per_size = 3;
  c.solver.subproblem_size = 8;
  c.solver.max_rounds = 5;
  c.solver.stall_rounds = 5;
  c.repetitions = 3;
  c.pause_durations = {10, 40};
  c.pause.instance_size = 12;
  return c;
}

TEST(SizeSweepTest, RowCountAndReproducibility) {
  const auto c = small_config();
  const auto a = run_size_sweep(c);
  ASSERT_EQ(a.size(), 6U);
  for (const auto& r : a) {
    EXPECT_EQ(r.status, "ok");
    EXPECT_GE(r.delta, r.optimal_delta);
    EXPECT_EQ(r.energy, r.delta * r.delta);
  }
  std::ostringstream first, second;
  write_size_sweep_csv(first, a);
  write_size_sweep_csv(second, run_size_sweep(c));
  EXPECT_EQ(strip_last_column(first.str()), strip_last_column(second.str()));
}

TEST(SizeSweepTest, SmallestSizeIsSolved) {
  ExperimentConfig c;
  c.sizes = {2};
  c.datasets_per_size = 1;
  const auto rows = run_size_sweep(c);
  ASSERT_EQ(rows.size(), 1U);
  EXPECT_EQ(rows[0].delta, 0);
}

TEST(SizeSweepTest, TabuSolvesMostSmallInstances) {
  ExperimentConfig c;
  c.sizes = {8, 16};
  c.datasets_per_size = 10;
  const auto rows = run_size_sweep(c);
  ASSERT_EQ(rows.size(), 20U);
  EXPECT_GE(std::count_if(rows.begin(), rows.end(), [](const auto& r) { return r.delta == 0; }), 18);
}

TEST(SizeSweepTest, ThreadCountDoesNotChangeResults) {
  auto c = small_config();
  std::ostringstream one, four;
  write_size_sweep_csv(one, run_size_sweep(c));
  c.threads = 4;
  write_size_sweep_csv(four, run_size_sweep(c));
  EXPECT_EQ(strip_last_column(one.str()), strip_last_column(four.str()));
}

TEST(SizeSweepTest, CsvHeaderEndsWithWallTime) {
  std::ostringstream out;
  write_size_sweep_csv(out, {});
  const std::string header = out.str().substr(0, out.str().find('\n'));
  EXPECT_EQ(header.substr(header.rfind(',') + 1), "wall_time");
}

TEST(PauseSweepTest, RowsPerArmAndPairedSeeds) {
  const auto c = small_config();
  const auto inst = generate_perfect(12, 100, 3);
  const auto rows = run_pause_sweep(c, inst);
  ASSERT_EQ(rows.size(), 9U);
  for (std::size_t i = 0; i < rows.size(); ++i) {
    EXPECT_EQ(rows[i].seed, rows[i % 3].seed);
    EXPECT_EQ(rows[i].status, "ok");
    EXPECT_EQ(rows[i].energy, rows[i].delta * rows[i].delta);
    EXPECT_EQ(rows[i].delta % 2, inst.total() % 2);
  }
  EXPECT_DOUBLE_EQ(rows[0].duration, 0.0);
  EXPECT_DOUBLE_EQ(rows[8].duration, 40.0);
}

TEST(PauseSweepTest, ZeroDurationOnlyGivesControlRows) {
  auto c = small_config();
  c.pause_durations = {0};
  EXPECT_EQ(run_pause_sweep(c, generate_perfect(10, 50, 1)).size(), c.repetitions);
}

TEST(ConfigTest, ParsesNestedKeys) {
  const auto c = config_from_json(R"({"sizes": [8, 16], "master_seed": 9,
      "solver": {"backend": "sa", "subproblem_size": 12, "anneal": {"beta_start": 0.5, "beta_end": 4}},
      "pause": {"pause_start": 8}})");
  EXPECT_EQ(c.sizes, (std::vector<std::size_t>{8, 16}));
  EXPECT_EQ(c.master_seed, 9U);
  EXPECT_EQ(c.solver.backend, Backend::kSa);
  EXPECT_EQ(c.solver.subproblem_size, 12U);
  EXPECT_TRUE(c.solver.fixed_betas);
  EXPECT_DOUBLE_EQ(c.solver.anneal.beta_end, 4.0);
  EXPECT_DOUBLE_EQ(c.pause.pause_start, 8.0);
}

TEST(ConfigTest, RejectsBadInput) {
  EXPECT_THROW(config_from_json("{"), InvalidArgument);
  EXPECT_THROW(config_from_json(R"({"sizez": [8]})"), InvalidArgument);
  EXPECT_THROW(config_from_json(R"({"sizes": [1]})"), InvalidArgument);
  EXPECT_THROW(config_from_json(R"({"solver": {"backend": "qpu"}})"), InvalidArgument);
  EXPECT_THROW(config_from_json(R"({"pause": {"pause_start": 30}})"), InvalidArgument);
  EXPECT_THROW(config_from_json(R"({"repetitions": 0})"), InvalidArgument);
}

}  // namespace
}  // namespace subqubo
