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

#pragma once

#include <cstddef>
#include <cstdint>
#include <iosfwd>
#include <string>
#include <utility>
#include <vector>

#include "subqubo/annealer.hpp"
#include "subqubo/hybrid.hpp"
#include "subqubo/instances.hpp"

namespace subqubo {

// Settings for the pause study: a base ramp of anneal_time microseconds
// paused at pause_start, solved directly (no decomposition) by `backend`.
struct PauseProtocol {
  Backend backend = Backend::kSvmc;
  double anneal_time = 20.0;
  double pause_start = 10.0;
  AnnealParams anneal{};
  bool fixed_betas = false;
  // Instance used by the CLI when no instance file is given.
  std::size_t instance_size = 24;
  std::uint64_t instance_seed = 0;
};

struct ExperimentConfig {
  std::vector<std::size_t> sizes{8, 16, 32, 64, 128, 256};
  std::size_t datasets_per_size = 10;
  std::int64_t max_value = 100;
  HybridParams solver{};
  std::size_t repetitions = 5;
  std::vector<double> pause_durations{10, 40, 60, 100, 120};
  double saturation = 50.0;
  std::uint64_t master_seed = 1;
  std::string output_path;
  // Cells are independent; results do not depend on this.
  std::size_t threads = 1;
  // Add the subset-sum oracle's optimal delta to each size-sweep row.
  bool compute_optimal = true;
  PauseProtocol pause{};

  void validate() const;
};

// Parse a JSON config; absent keys keep their defaults, unknown keys and
// out-of-range values throw InvalidArgument.
ExperimentConfig config_from_json(const std::string& text);

struct SizeSweepRow {
  std::size_t size = 0;
  std::size_t dataset = 0;
  std::uint64_t instance_seed = 0;
  std::int64_t total = 0;
  std::int64_t optimal_delta = -1;  // -1 when not computed
  std::int64_t delta = -1;          // -1 on failure
  std::int64_t energy = -1;
  std::size_t rounds = 0;
  std::string status = "ok";
  double wall_time = 0.0;
};

struct PauseSweepRow {
  double duration = 0.0;
  std::size_t repetition = 0;
  std::uint64_t seed = 0;
  std::int64_t delta = -1;
  std::int64_t energy = -1;
  std::string status = "ok";
  double wall_time = 0.0;
};

// datasets_per_size perfect instances per size, each solved with
// decompose_solve. Instance and solver seeds derive from (master_seed,
// size, dataset). Solver failures are recorded in the row status.
std::vector<SizeSweepRow> run_size_sweep(const ExperimentConfig& config);

// Durations actually run: a zero-duration control arm first, then the
// distinct positive durations in the order given.
std::vector<double> pause_arms(const std::vector<double>& durations);

// For each arm of pause_arms and each repetition, anneal the instance with
// make_pause_schedule(anneal_time, pause_start, duration). Repetition r
// uses the same seed in every arm.
std::vector<PauseSweepRow> run_pause_sweep(const ExperimentConfig& config, const NppInstance& instance);

struct FitResult {
  double a = 0.0;
  double b = 0.0;
  std::vector<double> residuals;  // ln t - (ln A + x / B), per point
};

// Least-squares fit of ln t = ln A + x / B. Needs >= 3 points with t > 0 and
// a nonzero slope; throws InvalidArgument otherwise.
FitResult fit_exponential(const std::vector<std::pair<double, double>>& points);

struct BoxplotSummary {
  double min = 0.0;
  double q1 = 0.0;
  double median = 0.0;
  double q3 = 0.0;
  double max = 0.0;
  std::vector<double> saturated;
  std::vector<double> original;
};

// Values above `saturation` are capped before the quantiles are taken;
// quantiles interpolate linearly between order statistics at (n - 1) p.
BoxplotSummary boxplot_stats(const std::vector<double>& deltas, double saturation);

// Quantile with the same interpolation rule, on unsorted input.
double quantile(std::vector<double> values, double p);

// CSV writers. wall_time is always the last column.
void write_size_sweep_csv(std::ostream& out, const std::vector<SizeSweepRow>& rows);
void write_pause_sweep_csv(std::ostream& out, const std::vector<PauseSweepRow>& rows);
// One boxplot row per size (or per pause arm) over the successful rows.
void write_size_summary_csv(std::ostream& out, const std::vector<SizeSweepRow>& rows, double saturation);
void write_pause_summary_csv(std::ostream& out, const std::vector<PauseSweepRow>& rows, double saturation);
// parameter,value rows: A, B, points, rms_log_residual.
void write_fit_csv(std::ostream& out, const FitResult& fit);
void write_fit_residuals_csv(std::ostream& out, const FitResult& fit,
                             const std::vector<std::pair<double, double>>& points);
void write_histogram_csv(std::ostream& out, const std::vector<HistogramBin>& bins);

}  // namespace subqubo
