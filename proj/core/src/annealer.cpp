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

#include "subqubo/annealer.hpp"

#include <algorithm>
#include <chrono>
#include <cmath>
#include <limits>
#include <numbers>
#include <string>

#include "subqubo/error.hpp"
#include "subqubo/rng.hpp"

namespace subqubo {

Schedule::Schedule(std::vector<Vertex> vertices) : vertices_(std::move(vertices)) {
  if (vertices_.size() < 2) throw InvalidArgument("schedule needs at least two vertices");
  if (vertices_.front().time != 0.0 || vertices_.front().s != 0.0) {
    throw InvalidArgument("schedule must start at (0, 0)");
  }
  if (vertices_.back().s != 1.0) throw InvalidArgument("schedule must end at s = 1");
  for (std::size_t k = 0; k < vertices_.size(); ++k) {
    const auto& v = vertices_[k];
    if (!std::isfinite(v.time) || !std::isfinite(v.s) || v.s < 0.0 || v.s > 1.0) {
      throw InvalidArgument("schedule vertex " + std::to_string(k) + " is out of range");
    }
    if (k > 0 && v.time <= vertices_[k - 1].time) {
      throw InvalidArgument("schedule times must be strictly increasing (vertex " + std::to_string(k) + ")");
    }
    if (k > 0 && v.s < vertices_[k - 1].s) {
      throw InvalidArgument("schedule s must be nondecreasing (vertex " + std::to_string(k) + ")");
    }
  }
}

Schedule Schedule::linear(double anneal_time) {
  if (!(anneal_time > 0.0) || !std::isfinite(anneal_time)) {
    throw InvalidArgument("anneal time must be positive");
  }
  return Schedule({{0.0, 0.0}, {anneal_time, 1.0}});
}

double Schedule::at(double t) const noexcept {
  if (t <= 0.0) return vertices_.front().s;
  if (t >= total_time()) return vertices_.back().s;
  const auto it = std::upper_bound(vertices_.begin(), vertices_.end(), t,
                                   [](double value, const Vertex& v) { return value < v.time; });
  const Vertex& hi = *it;
  const Vertex& lo = *(it - 1);
  if (hi.s == lo.s) return lo.s;
  return lo.s + (hi.s - lo.s) * (t - lo.time) / (hi.time - lo.time);
}

Schedule make_pause_schedule(double anneal_time, double pause_start, double pause_duration) {
  if (!std::isfinite(anneal_time) || !std::isfinite(pause_start) || !std::isfinite(pause_duration)) {
    throw InvalidArgument("pause schedule parameters must be finite");
  }
  if (!(pause_start > 0.0 && pause_start < anneal_time)) {
    throw InvalidArgument("pause start must lie strictly inside (0, anneal_time)");
  }
  if (pause_duration < 0.0) throw InvalidArgument("pause duration must be >= 0");
  if (pause_duration == 0.0) return Schedule::linear(anneal_time);
  const double s_pause = pause_start / anneal_time;
  return Schedule({{0.0, 0.0},
                   {pause_start, s_pause},
                   {pause_start + pause_duration, s_pause},
                   {anneal_time + pause_duration, 1.0}});
}

void AnnealParams::validate() const {
  if (sweeps_per_microsecond == 0) throw InvalidArgument("sweeps_per_microsecond must be positive");
  if (reads == 0) throw InvalidArgument("reads must be positive");
  if (!(beta_start > 0.0) || !(beta_end >= beta_start) || !std::isfinite(beta_end)) {
    throw InvalidArgument("need beta_end >= beta_start > 0");
  }
}

AnnealParams AnnealParams::for_model(const IsingModel& model, AnnealParams base) {
  // Largest and smallest single-flip costs, bounded from the coefficients.
  std::vector<double> reach(model.size(), 0.0);
  double smallest = std::numeric_limits<double>::infinity();
  for (std::size_t i = 0; i < model.size(); ++i) {
    const double h = std::abs(model.h()[i]);
    reach[i] += h;
    if (h > 0.0) smallest = std::min(smallest, h);
  }
  for (const auto& [edge, c] : model.couplers()) {
    const double a = std::abs(c);
    reach[edge.first] += a;
    reach[edge.second] += a;
    if (a > 0.0) smallest = std::min(smallest, a);
  }
  const double largest = reach.empty() ? 0.0 : *std::max_element(reach.begin(), reach.end());
  if (largest == 0.0) {
    base.beta_start = 0.1;
    base.beta_end = 10.0;
    return base;
  }
  base.beta_start = std::log(2.0) / (2.0 * largest);
  base.beta_end = std::max(base.beta_start, std::log(100.0) / (2.0 * smallest));
  return base;
}

AnnealParams AnnealParams::for_model(const IsingModel& model) { return for_model(model, AnnealParams{}); }

std::size_t total_sweeps(const Schedule& schedule, std::size_t sweeps_per_microsecond) {
  return static_cast<std::size_t>(
      std::llround(schedule.total_time() * static_cast<double>(sweeps_per_microsecond)));
}

std::vector<double> sweep_times(const Schedule& schedule, std::size_t sweeps_per_microsecond) {
  const std::size_t k_total = total_sweeps(schedule, sweeps_per_microsecond);
  std::vector<double> times(k_total);
  const double slot = k_total == 0 ? 0.0 : schedule.total_time() / static_cast<double>(k_total);
  for (std::size_t k = 0; k < k_total; ++k) times[k] = (static_cast<double>(k) + 0.5) * slot;
  return times;
}

namespace {

std::vector<double> beta_ramp(const Schedule& schedule, const AnnealParams& params,
                              std::vector<double>* s_values = nullptr) {
  const auto times = sweep_times(schedule, params.sweeps_per_microsecond);
  std::vector<double> betas(times.size());
  if (s_values) s_values->resize(times.size());
  for (std::size_t k = 0; k < times.size(); ++k) {
    const double s = schedule.at(times[k]);
    betas[k] = params.beta_start + s * (params.beta_end - params.beta_start);
    if (s_values) (*s_values)[k] = s;
  }
  return betas;
}

bool metropolis(double delta_e, double beta, Rng& rng) {
  if (delta_e <= 0.0) return true;
  const double x = beta * delta_e;
  // exp(-x) underflows the 53-bit uniform below this point
  if (x > 40.0) return false;
  return rng.uniform() < std::exp(-x);
}

double seconds_since(std::chrono::steady_clock::time_point t0) {
  return std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
}

}  // namespace

AnnealResult sa_solve(const IsingModel& model, const Schedule& schedule, const AnnealParams& params) {
  params.validate();
  const auto t0 = std::chrono::steady_clock::now();
  const std::size_t n = model.size();
  const IsingAdjacency adj(model);
  const auto betas = beta_ramp(schedule, params);

  AnnealResult result;
  result.sweeps = betas.size();
  result.reads = params.reads;
  result.energy = std::numeric_limits<double>::infinity();

  SpinAssignment spins(n);
  std::vector<double> field(n);
  for (std::size_t read = 0; read < params.reads; ++read) {
    Rng rng(derive_seed(params.seed, {read}));
    for (auto& s : spins) s = rng.coin() ? 1 : -1;
    for (std::size_t i = 0; i < n; ++i) {
      double f = model.h()[i];
      for (std::size_t k = 0; k < adj.neighbors[i].size(); ++k) f += adj.weights[i][k] * spins[adj.neighbors[i][k]];
      field[i] = f;
    }
    double energy = ising_energy(model, spins);
    double read_best = energy;
    if (energy < result.energy) {
      result.energy = energy;
      result.spins = spins;
    }

    for (double beta : betas) {
      for (std::size_t i = 0; i < n; ++i) {
        const double delta_e = -2.0 * spins[i] * field[i];
        if (!metropolis(delta_e, beta, rng)) continue;
        spins[i] = static_cast<std::int8_t>(-spins[i]);
        energy += delta_e;
        const double push = 2.0 * spins[i];
        for (std::size_t k = 0; k < adj.neighbors[i].size(); ++k) field[adj.neighbors[i][k]] += push * adj.weights[i][k];
      }
      if (energy < read_best) read_best = energy;
      if (energy < result.energy) {
        result.energy = energy;
        result.spins = spins;
      }
    }
    result.read_energies.push_back(read_best);
  }

  // drop accumulated rounding from the incremental bookkeeping
  result.energy = ising_energy(model, result.spins);
  result.wall_time = seconds_since(t0);
  return result;
}

double svmc_energy(const IsingModel& model, const std::vector<double>& theta, double s,
                   double transverse_scale) {
  if (theta.size() != model.size()) throw InvalidArgument("angle vector does not match model size");
  double transverse = 0.0;
  double problem = 0.0;
  for (std::size_t i = 0; i < theta.size(); ++i) {
    transverse += std::sin(theta[i]);
    problem += model.h()[i] * std::cos(theta[i]);
  }
  for (const auto& [edge, c] : model.couplers()) {
    problem += c * std::cos(theta[edge.first]) * std::cos(theta[edge.second]);
  }
  return -(1.0 - s) * transverse_scale * transverse + s * problem;
}

AnnealResult svmc_solve(const IsingModel& model, const Schedule& schedule, const AnnealParams& params) {
  params.validate();
  const auto t0 = std::chrono::steady_clock::now();
  constexpr double pi = std::numbers::pi;
  const std::size_t n = model.size();
  const IsingAdjacency adj(model);
  std::vector<double> s_values;
  const auto betas = beta_ramp(schedule, params, &s_values);
  double scale = model.max_abs_coefficient();
  if (scale == 0.0) scale = 1.0;

  AnnealResult result;
  result.sweeps = betas.size();
  result.reads = params.reads;
  result.energy = std::numeric_limits<double>::infinity();

  std::vector<double> theta(n), cos_t(n), sin_t(n), field(n), proj_field(n);
  SpinAssignment proj(n);
  for (std::size_t read = 0; read < params.reads; ++read) {
    Rng rng(derive_seed(params.seed, {read}));
    // ground state of the transverse term
    std::fill(theta.begin(), theta.end(), pi / 2.0);
    for (std::size_t i = 0; i < n; ++i) {
      cos_t[i] = std::cos(theta[i]);
      sin_t[i] = std::sin(theta[i]);
      proj[i] = cos_t[i] >= 0.0 ? 1 : -1;
    }
    for (std::size_t i = 0; i < n; ++i) {
      double f = model.h()[i];
      double pf = model.h()[i];
      for (std::size_t k = 0; k < adj.neighbors[i].size(); ++k) {
        f += adj.weights[i][k] * cos_t[adj.neighbors[i][k]];
        pf += adj.weights[i][k] * proj[adj.neighbors[i][k]];
      }
      field[i] = f;
      proj_field[i] = pf;
    }
    double proj_energy = ising_energy(model, proj);
    double read_best = proj_energy;
    if (proj_energy < result.energy) {
      result.energy = proj_energy;
      result.spins = proj;
    }

    for (std::size_t sweep = 0; sweep < betas.size(); ++sweep) {
      const double s = s_values[sweep];
      const double beta = betas[sweep];
      const double transverse = (1.0 - s) * scale;
      const double width = pi * (1.0 - s) + 0.05;
      for (std::size_t i = 0; i < n; ++i) {
        double next = theta[i] + (2.0 * rng.uniform() - 1.0) * width;
        // reflect into [0, pi]
        next = std::fmod(next, 2.0 * pi);
        if (next < 0.0) next += 2.0 * pi;
        if (next > pi) next = 2.0 * pi - next;
        const double c_new = std::cos(next);
        const double s_new = std::sin(next);
        const double delta_e = -transverse * (s_new - sin_t[i]) + s * field[i] * (c_new - cos_t[i]);
        if (!metropolis(delta_e, beta, rng)) continue;

        const double dc = c_new - cos_t[i];
        for (std::size_t k = 0; k < adj.neighbors[i].size(); ++k) field[adj.neighbors[i][k]] += adj.weights[i][k] * dc;
        theta[i] = next;
        cos_t[i] = c_new;
        sin_t[i] = s_new;

        const std::int8_t p_new = c_new >= 0.0 ? 1 : -1;
        if (p_new != proj[i]) {
          proj_energy += -2.0 * proj[i] * proj_field[i];
          proj[i] = p_new;
          const double push = 2.0 * p_new;
          for (std::size_t k = 0; k < adj.neighbors[i].size(); ++k) {
            proj_field[adj.neighbors[i][k]] += push * adj.weights[i][k];
          }
        }
      }
      if (proj_energy < read_best) read_best = proj_energy;
      if (proj_energy < result.energy) {
        result.energy = proj_energy;
        result.spins = proj;
      }
    }
    result.read_energies.push_back(read_best);
  }

  result.energy = ising_energy(model, result.spins);
  result.wall_time = seconds_since(t0);
  return result;
}

}  // namespace subqubo
