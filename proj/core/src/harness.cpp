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

#include <algorithm>
#include <atomic>
#include <cmath>
#include <map>
#include <ostream>
#include <set>
#include <thread>

#include "json.hpp"
#include "subqubo/error.hpp"
#include "subqubo/io.hpp"
#include "subqubo/model.hpp"
#include "subqubo/rng.hpp"

namespace subqubo {

using nlohmann::json;

void ExperimentConfig::validate() const {
  if (sizes.empty()) throw InvalidArgument("config: sizes must be nonempty");
  for (std::size_t s : sizes) {
    if (s < 2) throw InvalidArgument("config: every size must be >= 2");
  }
  if (datasets_per_size == 0) throw InvalidArgument("config: datasets_per_size must be >= 1");
  if (max_value < 1) throw InvalidArgument("config: max_value must be >= 1");
  if (repetitions == 0) throw InvalidArgument("config: repetitions must be >= 1");
  if (pause_durations.empty()) throw InvalidArgument("config: pause_durations must be nonempty");
  for (double d : pause_durations) {
    if (!(d >= 0.0) || !std::isfinite(d)) throw InvalidArgument("config: pause durations must be >= 0");
  }
  if (!(saturation > 0.0)) throw InvalidArgument("config: saturation must be positive");
  if (threads == 0) throw InvalidArgument("config: threads must be >= 1");
  solver.validate();
  if (pause.backend != Backend::kSa && pause.backend != Backend::kSvmc) {
    throw InvalidArgument("config: pause.backend must be sa or svmc");
  }
  if (!(pause.pause_start > 0.0 && pause.pause_start < pause.anneal_time)) {
    throw InvalidArgument("config: pause.pause_start must lie inside (0, pause.anneal_time)");
  }
  if (pause.anneal.sweeps_per_microsecond == 0 || pause.anneal.reads == 0) {
    throw InvalidArgument("config: pause sweeps_per_microsecond and reads must be positive");
  }
  if (pause.fixed_betas) pause.anneal.validate();
  if (pause.instance_size < 2) throw InvalidArgument("config: pause.instance_size must be >= 2");
}

namespace {

void reject_unknown(const json& j, const std::set<std::string>& known, const std::string& where) {
  if (!j.is_object()) throw InvalidArgument("config: '" + where + "' must be an object");
  for (const auto& [key, value] : j.items()) {
    if (!known.count(key)) throw InvalidArgument("config: unknown key '" + where + key + "'");
  }
}

template <typename T>
void read(const json& j, const char* key, T& out) {
  if (j.contains(key)) out = j.at(key).get<T>();
}

void read_anneal(const json& j, AnnealParams& a, bool& fixed, const std::string& where) {
  reject_unknown(j, {"sweeps_per_microsecond", "reads", "beta_start", "beta_end"}, where);
  read(j, "sweeps_per_microsecond", a.sweeps_per_microsecond);
  read(j, "reads", a.reads);
  if (j.contains("beta_start") || j.contains("beta_end")) {
    fixed = true;
    read(j, "beta_start", a.beta_start);
    read(j, "beta_end", a.beta_end);
  }
}

void read_solver(const json& j, HybridParams& p) {
  reject_unknown(j,
                 {"backend", "subproblem_size", "max_rounds", "stall_rounds", "random_fraction", "target_energy",
                  "chimera_m", "chain_strength", "anneal_time", "tabu", "anneal"},
                 "solver.");
  if (j.contains("backend")) p.backend = parse_backend(j.at("backend").get<std::string>());
  read(j, "subproblem_size", p.subproblem_size);
  read(j, "max_rounds", p.max_rounds);
  read(j, "stall_rounds", p.stall_rounds);
  read(j, "random_fraction", p.random_fraction);
  read(j, "chimera_m", p.chimera_m);
  read(j, "chain_strength", p.chain_strength);
  read(j, "anneal_time", p.anneal_time);
  if (j.contains("target_energy")) {
    if (j.at("target_energy").is_null()) {
      p.target_energy.reset();
    } else {
      p.target_energy = j.at("target_energy").get<std::int64_t>();
    }
  }
  if (j.contains("tabu")) {
    const json& t = j.at("tabu");
    reject_unknown(t, {"tenure", "max_iterations", "stall_limit"}, "solver.tabu.");
    TabuParams tp;
    read(t, "tenure", tp.tenure);
    read(t, "max_iterations", tp.max_iterations);
    read(t, "stall_limit", tp.stall_limit);
    p.tabu = tp;
  }
  if (j.contains("anneal")) read_anneal(j.at("anneal"), p.anneal, p.fixed_betas, "solver.anneal.");
}

}  // namespace

ExperimentConfig config_from_json(const std::string& text) {
  json j;
  try {
    j = json::parse(text);
  } catch (const json::exception& e) {
    throw InvalidArgument(std::string("config: malformed JSON: ") + e.what());
  }
  ExperimentConfig c;
  try {
    reject_unknown(j,
                   {"sizes", "datasets_per_size", "max_value", "solver", "repetitions", "pause_durations",
                    "saturation", "master_seed", "output_path", "threads", "compute_optimal", "pause"},
                   "");
    read(j, "sizes", c.sizes);
    read(j, "datasets_per_size", c.datasets_per_size);
    read(j, "max_value", c.max_value);
    read(j, "repetitions", c.repetitions);
    read(j, "pause_durations", c.pause_durations);
    read(j, "saturation", c.saturation);
    read(j, "master_seed", c.master_seed);
    read(j, "output_path", c.output_path);
    read(j, "threads", c.threads);
    read(j, "compute_optimal", c.compute_optimal);
    if (j.contains("solver")) read_solver(j.at("solver"), c.solver);
    if (j.contains("pause")) {
      const json& p = j.at("pause");
      reject_unknown(p,
                     {"backend", "anneal_time", "pause_start", "sweeps_per_microsecond", "reads", "beta_start",
                      "beta_end", "instance_size", "instance_seed"},
                     "pause.");
      if (p.contains("backend")) c.pause.backend = parse_backend(p.at("backend").get<std::string>());
      read(p, "anneal_time", c.pause.anneal_time);
      read(p, "pause_start", c.pause.pause_start);
      read(p, "instance_size", c.pause.instance_size);
      read(p, "instance_seed", c.pause.instance_seed);
      json anneal = json::object();
      for (const char* key : {"sweeps_per_microsecond", "reads", "beta_start", "beta_end"}) {
        if (p.contains(key)) anneal[key] = p.at(key);
      }
      read_anneal(anneal, c.pause.anneal, c.pause.fixed_betas, "pause.");
    }
  } catch (const json::exception& e) {
    throw InvalidArgument(std::string("config: ") + e.what());
  }
  c.validate();
  return c;
}

namespace {

// Run fn(i) for i in [0, count) on up to `threads` workers.
template <typename Fn>
void for_each_cell(std::size_t count, std::size_t threads, Fn&& fn) {
  if (threads <= 1 || count <= 1) {
    for (std::size_t i = 0; i < count; ++i) fn(i);
    return;
  }
  std::atomic<std::size_t> next{0};
  std::vector<std::jthread> workers;
  for (std::size_t t = 0; t < std::min(threads, count); ++t) {
    workers.emplace_back([&] {
      for (std::size_t i = next++; i < count; i = next++) fn(i);
    });
  }
}

}  // namespace

std::vector<SizeSweepRow> run_size_sweep(const ExperimentConfig& config) {
  config.validate();
  const std::size_t per = config.datasets_per_size;
  std::vector<SizeSweepRow> rows(config.sizes.size() * per);

  for_each_cell(rows.size(), config.threads, [&](std::size_t cell) {
    SizeSweepRow& row = rows[cell];
    row.size = config.sizes[cell / per];
    row.dataset = cell % per;
    row.instance_seed = derive_seed(config.master_seed, {row.size, row.dataset});
    try {
      const NppInstance inst = generate_perfect(row.size, config.max_value, row.instance_seed);
      row.total = inst.total();
      if (config.compute_optimal) {
        try {
          row.optimal_delta = optimal_delta(inst);
        } catch (const ResourceLimit&) {
          row.optimal_delta = -1;
        }
      }
      const QuboMatrix q = build_qubo(inst);
      HybridParams params = config.solver;
      params.seed = derive_seed(config.master_seed, {row.size, row.dataset, 1});
      const HybridResult solved = decompose_solve(q, params);
      row.delta = delta(inst, solved.result.assignment);
      row.energy = solved.result.energy;
      row.rounds = solved.rounds.size();
      row.wall_time = solved.result.wall_time;
    } catch (const std::exception& e) {
      row.status = std::string("error: ") + e.what();
    }
  });
  return rows;
}

std::vector<double> pause_arms(const std::vector<double>& durations) {
  std::vector<double> arms{0.0};
  for (double d : durations) {
    if (d > 0.0 && std::find(arms.begin(), arms.end(), d) == arms.end()) arms.push_back(d);
  }
  return arms;
}

std::vector<PauseSweepRow> run_pause_sweep(const ExperimentConfig& config, const NppInstance& instance) {
  config.validate();
  const auto arms = pause_arms(config.pause_durations);
  const std::size_t reps = config.repetitions;
  const QuboMatrix q = build_qubo(instance);
  const IsingModel model = ising_from_qubo(q);
  std::vector<PauseSweepRow> rows(arms.size() * reps);

  for_each_cell(rows.size(), config.threads, [&](std::size_t cell) {
    PauseSweepRow& row = rows[cell];
    row.duration = arms[cell / reps];
    row.repetition = cell % reps;
    row.seed = derive_seed(config.master_seed, {row.repetition});
    try {
      const Schedule schedule =
          make_pause_schedule(config.pause.anneal_time, config.pause.pause_start, row.duration);
      AnnealParams ap = config.pause.anneal;
      ap.seed = row.seed;
      if (!config.pause.fixed_betas) ap = AnnealParams::for_model(model, ap);
      const AnnealResult sample = config.pause.backend == Backend::kSvmc ? svmc_solve(model, schedule, ap)
                                                                         : sa_solve(model, schedule, ap);
      const BinaryAssignment x = spins_to_binary(sample.spins);
      row.delta = delta(instance, x);
      row.energy = qubo_energy(q, x);
      row.wall_time = sample.wall_time;
    } catch (const std::exception& e) {
      row.status = std::string("error: ") + e.what();
    }
  });
  return rows;
}

FitResult fit_exponential(const std::vector<std::pair<double, double>>& points) {
  if (points.size() < 3) throw InvalidArgument("exponential fit needs at least 3 points");
  for (const auto& [x, t] : points) {
    if (!(t > 0.0) || !std::isfinite(t) || !std::isfinite(x)) {
      throw InvalidArgument("exponential fit needs finite x and t > 0");
    }
  }
  const auto n = static_cast<double>(points.size());
  double mean_x = 0.0, mean_y = 0.0;
  for (const auto& [x, t] : points) {
    mean_x += x;
    mean_y += std::log(t);
  }
  mean_x /= n;
  mean_y /= n;
  double sxx = 0.0, sxy = 0.0;
  for (const auto& [x, t] : points) {
    const double dx = x - mean_x;
    sxx += dx * dx;
    sxy += dx * (std::log(t) - mean_y);
  }
  if (sxx == 0.0) throw InvalidArgument("degenerate exponential fit: all x are equal");
  const double slope = sxy / sxx;
  // growth across the whole x range below rounding noise means B is unbounded
  if (std::abs(slope) * std::sqrt(sxx) <= 1e-12) {
    throw InvalidArgument("degenerate exponential fit: zero growth rate (B is unbounded)");
  }
  FitResult fit;
  const double intercept = mean_y - slope * mean_x;
  fit.a = std::exp(intercept);
  fit.b = 1.0 / slope;
  fit.residuals.reserve(points.size());
  for (const auto& [x, t] : points) fit.residuals.push_back(std::log(t) - (intercept + slope * x));
  return fit;
}

double quantile(std::vector<double> values, double p) {
  if (values.empty()) throw InvalidArgument("quantile of an empty list");
  std::sort(values.begin(), values.end());
  const double h = (static_cast<double>(values.size()) - 1.0) * p;
  const auto lo = static_cast<std::size_t>(std::floor(h));
  const std::size_t hi = std::min(lo + 1, values.size() - 1);
  return values[lo] + (h - static_cast<double>(lo)) * (values[hi] - values[lo]);
}

BoxplotSummary boxplot_stats(const std::vector<double>& deltas, double saturation) {
  if (deltas.empty()) throw InvalidArgument("boxplot needs at least one value");
  BoxplotSummary out;
  out.original = deltas;
  out.saturated.reserve(deltas.size());
  for (double d : deltas) out.saturated.push_back(std::min(d, saturation));
  std::vector<double> sorted = out.saturated;
  std::sort(sorted.begin(), sorted.end());
  out.min = sorted.front();
  out.max = sorted.back();
  out.q1 = quantile(sorted, 0.25);
  out.median = quantile(sorted, 0.5);
  out.q3 = quantile(sorted, 0.75);
  return out;
}

void write_size_sweep_csv(std::ostream& out, const std::vector<SizeSweepRow>& rows) {
  out << "size,dataset,instance_seed,total,optimal_delta,delta,energy,rounds,status,wall_time\n";
  for (const auto& r : rows) {
    out << r.size << ',' << r.dataset << ',' << r.instance_seed << ',' << r.total << ',' << r.optimal_delta << ','
        << r.delta << ',' << r.energy << ',' << r.rounds << ",\"" << r.status << "\"," << format_number(r.wall_time)
        << '\n';
  }
}

void write_pause_sweep_csv(std::ostream& out, const std::vector<PauseSweepRow>& rows) {
  out << "duration,repetition,seed,delta,energy,status,wall_time\n";
  for (const auto& r : rows) {
    out << format_number(r.duration) << ',' << r.repetition << ',' << r.seed << ',' << r.delta << ',' << r.energy
        << ",\"" << r.status << "\"," << format_number(r.wall_time) << '\n';
  }
}

namespace {

void write_summary_row(std::ostream& out, const std::string& key, const std::vector<double>& deltas,
                       double saturation) {
  if (deltas.empty()) {
    out << key << ",0,0,,,,,,\n";
    return;
  }
  const auto s = boxplot_stats(deltas, saturation);
  const auto zeros = static_cast<std::size_t>(std::count(deltas.begin(), deltas.end(), 0.0));
  out << key << ',' << deltas.size() << ',' << zeros << ',' << format_number(s.min) << ',' << format_number(s.q1)
      << ',' << format_number(s.median) << ',' << format_number(s.q3) << ',' << format_number(s.max) << ','
      << std::count_if(deltas.begin(), deltas.end(), [&](double d) { return d > saturation; }) << '\n';
}

}  // namespace

void write_size_summary_csv(std::ostream& out, const std::vector<SizeSweepRow>& rows, double saturation) {
  out << "size,count,optimal_count,min,q1,median,q3,max,saturated_count\n";
  std::map<std::size_t, std::vector<double>> by_size;
  std::vector<std::size_t> order;
  for (const auto& r : rows) {
    if (!by_size.count(r.size)) order.push_back(r.size);
    auto& bucket = by_size[r.size];
    if (r.status == "ok") bucket.push_back(static_cast<double>(r.delta));
  }
  for (std::size_t size : order) write_summary_row(out, std::to_string(size), by_size[size], saturation);
}

void write_pause_summary_csv(std::ostream& out, const std::vector<PauseSweepRow>& rows, double saturation) {
  out << "duration,count,optimal_count,min,q1,median,q3,max,saturated_count\n";
  std::vector<double> order;
  std::map<double, std::vector<double>> by_arm;
  for (const auto& r : rows) {
    if (!by_arm.count(r.duration)) order.push_back(r.duration);
    auto& bucket = by_arm[r.duration];
    if (r.status == "ok") bucket.push_back(static_cast<double>(r.delta));
  }
  for (double d : order) write_summary_row(out, format_number(d), by_arm[d], saturation);
}

void write_fit_csv(std::ostream& out, const FitResult& fit) {
  double ss = 0.0;
  for (double r : fit.residuals) ss += r * r;
  const double rms = fit.residuals.empty() ? 0.0 : std::sqrt(ss / static_cast<double>(fit.residuals.size()));
  out << "parameter,value\n";
  out << "A," << format_number(fit.a) << '\n';
  out << "B," << format_number(fit.b) << '\n';
  out << "points," << fit.residuals.size() << '\n';
  out << "rms_log_residual," << format_number(rms) << '\n';
}

void write_fit_residuals_csv(std::ostream& out, const FitResult& fit,
                             const std::vector<std::pair<double, double>>& points) {
  out << "x,t,fitted_t,log_residual\n";
  for (std::size_t i = 0; i < points.size() && i < fit.residuals.size(); ++i) {
    const auto& [x, t] = points[i];
    out << format_number(x) << ',' << format_number(t) << ',' << format_number(fit.a * std::exp(x / fit.b)) << ','
        << format_number(fit.residuals[i]) << '\n';
  }
}

void write_histogram_csv(std::ostream& out, const std::vector<HistogramBin>& bins) {
  out << "bin_lower_edge,count\n";
  for (const auto& b : bins) out << format_number(b.lower_edge) << ',' << b.count << '\n';
}

}  // namespace subqubo
