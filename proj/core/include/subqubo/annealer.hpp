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
#include <utility>
#include <vector>

#include "subqubo/assignment.hpp"
#include "subqubo/model.hpp"

namespace subqubo {

// Piecewise-linear anneal fraction s(t), t in microseconds. Vertex times are
// strictly increasing, s is nondecreasing, and the schedule runs from (0, 0)
// to (total_time, 1). Consecutive vertices with equal s form a pause.
class Schedule {
 public:
  struct Vertex {
    double time = 0.0;
    double s = 0.0;
    bool operator==(const Vertex&) const = default;
  };

  // Throws InvalidArgument if the vertices break the invariants above.
  explicit Schedule(std::vector<Vertex> vertices);

  // Plain ramp [(0,0), (anneal_time,1)].
  static Schedule linear(double anneal_time);

  const std::vector<Vertex>& vertices() const noexcept { return vertices_; }
  double total_time() const noexcept { return vertices_.back().time; }

  // s(t); clamps outside [0, total_time].
  double at(double t) const noexcept;

  bool operator==(const Schedule&) const = default;

 private:
  std::vector<Vertex> vertices_;
};

// Ramp of length anneal_time with a plateau of pause_duration inserted at
// pause_start. The plateau sits at s_p = pause_start / anneal_time and the
// total time grows to anneal_time + pause_duration. A zero pause is the
// plain linear ramp.
Schedule make_pause_schedule(double anneal_time, double pause_start, double pause_duration);

struct AnnealParams {
  std::size_t sweeps_per_microsecond = 100;
  double beta_start = 0.1;
  double beta_end = 10.0;
  std::uint64_t seed = 0;
  std::size_t reads = 1;

  // Same sweep/read settings with an inverse-temperature ramp scaled to the
  // model: beta_start gives a 50% uphill acceptance for the largest single
  // flip cost, beta_end a 1% acceptance for the smallest.
  static AnnealParams for_model(const IsingModel& model, AnnealParams base);
  static AnnealParams for_model(const IsingModel& model);

  void validate() const;
};

// round(total_time * sweeps_per_microsecond)
std::size_t total_sweeps(const Schedule& schedule, std::size_t sweeps_per_microsecond);

// Schedule time assigned to each sweep: sweep k runs at the midpoint of its
// slot, t_k = (k + 1/2) * total_time / K.
std::vector<double> sweep_times(const Schedule& schedule, std::size_t sweeps_per_microsecond);

struct AnnealResult {
  SpinAssignment spins;
  double energy = 0.0;  // problem energy of `spins`, offset included
  std::size_t sweeps = 0;  // per read
  std::size_t reads = 0;
  double wall_time = 0.0;
  // Best energy reached by each read.
  std::vector<double> read_energies;
};

// Metropolis single-spin-flip simulated annealing. Sweep k runs at
// beta_start + s(t_k) (beta_end - beta_start). Each read starts from a
// random state drawn from derive_seed(seed, read); the lowest energy state
// seen across every sweep of every read is returned.
AnnealResult sa_solve(const IsingModel& model, const Schedule& schedule, const AnnealParams& params);

// Spin-vector Monte Carlo: spin i is an angle theta_i in [0, pi] and the
// configuration energy is
//   E(theta; s) = -A(s) sum sin(theta_i)
//                 + B(s) [sum h_i cos(theta_i) + sum c_ij cos(theta_i) cos(theta_j)]
// with A(s) = 1 - s and B(s) = s. The transverse term is multiplied by the
// largest problem coefficient magnitude so both terms share the problem's
// units and the SA inverse-temperature ramp applies unchanged. Angles
// move by uniform proposals of half-width pi (1 - s) + 0.05 accepted at the
// inverse temperature of the sweep. Each sweep is projected to spins by
// S_i = sign(cos theta_i), sign(0) = +1, and the best projection by problem
// energy is returned.
AnnealResult svmc_solve(const IsingModel& model, const Schedule& schedule, const AnnealParams& params);

// E(theta; s) with the transverse term multiplied by `transverse_scale`,
// offset excluded.
double svmc_energy(const IsingModel& model, const std::vector<double>& theta, double s,
                   double transverse_scale = 1.0);

}  // namespace subqubo
