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

#include "subqubo/hybrid.hpp"

#include <algorithm>
#include <bit>
#include <chrono>
#include <cmath>
#include <numeric>
#include <ostream>

#include "json.hpp"
#include "subqubo/chimera.hpp"
#include "subqubo/error.hpp"

namespace subqubo {

std::string to_string(Backend backend) {
  switch (backend) {
    case Backend::kTabu: return "tabu";
    case Backend::kSa: return "sa";
    case Backend::kSvmc: return "svmc";
    case Backend::kEmbeddedSa: return "embedded_sa";
  }
  return "unknown";
}

Backend parse_backend(const std::string& name) {
  if (name == "tabu") return Backend::kTabu;
  if (name == "sa") return Backend::kSa;
  if (name == "svmc") return Backend::kSvmc;
  if (name == "embedded_sa") return Backend::kEmbeddedSa;
  throw InvalidArgument("unknown backend '" + name + "' (expected tabu, sa, svmc or embedded_sa)");
}

void HybridParams::validate() const {
  if (subproblem_size == 0) throw InvalidArgument("subproblem_size must be >= 1");
  if (max_rounds == 0) throw InvalidArgument("max_rounds must be >= 1");
  if (stall_rounds == 0 || stall_rounds > max_rounds) {
    throw InvalidArgument("stall_rounds must be in [1, max_rounds]");
  }
  if (!(random_fraction >= 0.0 && random_fraction <= 1.0)) {
    throw InvalidArgument("random_fraction must be in [0, 1]");
  }
  if (!(anneal_time > 0.0) || !std::isfinite(anneal_time)) throw InvalidArgument("anneal_time must be positive");
  if (tabu) tabu->validate();
  if (fixed_betas) anneal.validate();
  if (anneal.sweeps_per_microsecond == 0 || anneal.reads == 0) {
    throw InvalidArgument("anneal sweeps_per_microsecond and reads must be positive");
  }
  if (!(chain_strength >= 0.0)) throw InvalidArgument("chain_strength must be >= 0");
}

std::vector<std::size_t> select_subproblem(const QuboMatrix& q, const BinaryAssignment& x, std::size_t k, Rng& rng,
                                           double random_fraction) {
  const std::size_t n = q.size();
  if (k > n) {
    throw InvalidArgument("subproblem size " + std::to_string(k) + " exceeds problem size " + std::to_string(n));
  }
  if (x.size() != n) throw InvalidArgument("assignment does not match QUBO size");
  if (!(random_fraction >= 0.0 && random_fraction <= 1.0)) {
    throw InvalidArgument("random_fraction must be in [0, 1]");
  }
  const auto n_random = static_cast<std::size_t>(std::floor(random_fraction * static_cast<double>(k)));
  const std::size_t n_greedy = k - n_random;

  std::vector<std::int64_t> magnitude(n);
  for (std::size_t i = 0; i < n; ++i) {
    const std::int64_t g = flip_gain(q, x, i);
    magnitude[i] = g < 0 ? -g : g;
  }
  std::vector<std::size_t> order(n);
  std::iota(order.begin(), order.end(), std::size_t{0});
  std::stable_sort(order.begin(), order.end(),
                   [&](std::size_t a, std::size_t b) { return magnitude[a] > magnitude[b]; });

  std::vector<std::size_t> picked(order.begin(), order.begin() + static_cast<std::ptrdiff_t>(n_greedy));
  // partial Fisher-Yates over the remainder
  std::vector<std::size_t> rest(order.begin() + static_cast<std::ptrdiff_t>(n_greedy), order.end());
  std::sort(rest.begin(), rest.end());
  for (std::size_t r = 0; r < n_random; ++r) {
    const std::size_t j = r + rng.below(rest.size() - r);
    std::swap(rest[r], rest[j]);
    picked.push_back(rest[r]);
  }
  std::sort(picked.begin(), picked.end());
  return picked;
}

QuboMatrix clamp(const QuboMatrix& q, const BinaryAssignment& x, const std::vector<std::size_t>& free) {
  const std::size_t n = q.size();
  if (x.size() != n) throw InvalidArgument("assignment does not match QUBO size");
  check_binary(x);
  std::vector<bool> is_free(n, false);
  for (std::size_t f : free) {
    if (f >= n) throw InvalidArgument("free index " + std::to_string(f) + " out of range");
    if (is_free[f]) throw InvalidArgument("free index " + std::to_string(f) + " listed twice");
    is_free[f] = true;
  }

  std::int64_t offset = q.offset();
  for (std::size_t i = 0; i < n; ++i) {
    if (is_free[i] || !x[i]) continue;
    const auto row = q.row(i);
    offset += row[i];
    for (std::size_t j = i + 1; j < n; ++j) {
      if (!is_free[j] && x[j]) offset += row[j];
    }
  }

  QuboMatrix sub(free.size(), offset);
  for (std::size_t a = 0; a < free.size(); ++a) {
    const auto row = q.row(free[a]);
    std::int64_t linear = row[free[a]];
    for (std::size_t j = 0; j < n; ++j) {
      if (!is_free[j] && x[j]) linear += row[j];
    }
    sub.set(a, a, linear);
    for (std::size_t b = a + 1; b < free.size(); ++b) sub.set(a, b, row[free[b]]);
  }
  return sub;
}

SolveResult<std::int64_t> exhaustive_solve(const QuboMatrix& q) {
  const auto t0 = std::chrono::steady_clock::now();
  const std::size_t n = q.size();
  if (n > 30) throw ResourceLimit("exhaustive solve limited to 30 variables, got " + std::to_string(n));
  GainTracker<std::int64_t> tracker(q, BinaryAssignment(n, 0));
  SolveResult<std::int64_t> best;
  best.assignment = tracker.assignment();
  best.energy = tracker.energy();
  const std::uint64_t count = std::uint64_t{1} << n;
  for (std::uint64_t step = 1; step < count; ++step) {
    tracker.flip(static_cast<std::size_t>(std::countr_zero(step)));
    if (tracker.energy() < best.energy) {
      best.energy = tracker.energy();
      best.assignment = tracker.assignment();
    }
  }
  best.iterations_used = static_cast<std::size_t>(count);
  best.evaluations = static_cast<std::size_t>(count);
  best.wall_time = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
  return best;
}

std::uint64_t round_seed(std::uint64_t seed, std::size_t round) { return derive_seed(seed, {1, round}); }

namespace {

SolveResult<std::int64_t> from_spins(const QuboMatrix& q, const AnnealResult& sample) {
  SolveResult<std::int64_t> out;
  out.assignment = spins_to_binary(sample.spins);
  out.energy = qubo_energy(q, out.assignment);
  out.iterations_used = sample.sweeps * sample.reads;
  out.evaluations = sample.sweeps * sample.reads * q.size();
  return out;
}

AnnealParams anneal_params_for(const IsingModel& model, const HybridParams& params, std::uint64_t seed) {
  AnnealParams ap = params.anneal;
  ap.seed = seed;
  if (!params.fixed_betas) ap = AnnealParams::for_model(model, ap);
  return ap;
}

}  // namespace

SolveResult<std::int64_t> solve_with_backend(const QuboMatrix& q, const BinaryAssignment& start,
                                             const HybridParams& params, std::uint64_t seed,
                                             double* broken_chains) {
  if (start.size() != q.size()) throw InvalidArgument("start assignment does not match QUBO size");
  const auto t0 = std::chrono::steady_clock::now();
  const std::size_t n = q.size();
  SolveResult<std::int64_t> out;

  if (n == 0) {
    out.energy = q.offset();
  } else if (params.backend == Backend::kTabu) {
    if (n <= kExactSubproblemLimit) {
      out = exhaustive_solve(q);
    } else {
      TabuParams tp = params.tabu.value_or(TabuParams::defaults_for(n));
      tp.seed = seed;
      if (params.target_energy) tp.target_energy = static_cast<double>(*params.target_energy);
      out = tabu_search(q, tp, start);
    }
  } else {
    const IsingModel logical = ising_from_qubo(q);
    const Schedule schedule = params.schedule.value_or(Schedule::linear(params.anneal_time));
    if (params.backend == Backend::kSa) {
      out = from_spins(q, sa_solve(logical, schedule, anneal_params_for(logical, params, seed)));
    } else if (params.backend == Backend::kSvmc) {
      out = from_spins(q, svmc_solve(logical, schedule, anneal_params_for(logical, params, seed)));
    } else {
      const std::size_t m = params.chimera_m != 0 ? params.chimera_m : (n + 3) / 4;
      const ChimeraGraph target(m);
      const Embedding embedding = clique_embedding(n, target);
      const double strength = params.chain_strength > 0.0 ? params.chain_strength : default_chain_strength(logical);
      const IsingModel physical = embed_ising(logical, embedding, strength, target);
      const AnnealResult sample = sa_solve(physical, schedule, anneal_params_for(physical, params, seed));
      if (broken_chains) *broken_chains = chain_break_fraction(sample.spins, embedding);
      AnnealResult decoded = sample;
      decoded.spins = unembed(sample.spins, embedding);
      out = from_spins(q, decoded);
    }
  }

  if (n > 0) {
    const std::int64_t start_energy = qubo_energy(q, start);
    if (start_energy < out.energy) {
      out.assignment = start;
      out.energy = start_energy;
    }
  }
  out.wall_time = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
  return out;
}

HybridResult decompose_solve(const QuboMatrix& q, const HybridParams& params) {
  params.validate();
  const auto t0 = std::chrono::steady_clock::now();
  const std::size_t n = q.size();
  HybridResult out;

  Rng start_rng(derive_seed(params.seed, {0}));
  BinaryAssignment x(n);
  for (auto& v : x) v = start_rng.coin() ? 1 : 0;

  std::size_t evaluations = 0;
  if (n > 0) {
    TabuParams tp = params.tabu.value_or(TabuParams::defaults_for(n));
    tp.seed = derive_seed(params.seed, {0, 1});
    if (params.target_energy) tp.target_energy = static_cast<double>(*params.target_energy);
    const auto initial = tabu_search(q, tp, x);
    x = initial.assignment;
    evaluations += initial.evaluations;
  }
  std::int64_t energy = qubo_energy(q, x);
  out.initial_assignment = x;

  const auto reached = [&](std::int64_t e) { return params.target_energy && e <= *params.target_energy; };
  const std::size_t k = std::min(params.subproblem_size, n);
  const bool single_round = params.subproblem_size >= n;
  Rng select_rng(derive_seed(params.seed, {2}));

  std::size_t stall = 0;
  double broken_total = 0.0;
  std::size_t embedded_rounds = 0;
  for (std::size_t round = 0; round < params.max_rounds && n > 0 && !reached(energy); ++round) {
    RoundRecord rec;
    rec.round_index = round;
    rec.energy_before = energy;
    rec.selected_variables = select_subproblem(q, x, k, select_rng, params.random_fraction);

    const QuboMatrix sub = clamp(q, x, rec.selected_variables);
    BinaryAssignment sub_start(k);
    for (std::size_t a = 0; a < k; ++a) sub_start[a] = x[rec.selected_variables[a]];

    double broken = 0.0;
    const auto solved = solve_with_backend(sub, sub_start, params, round_seed(params.seed, round), &broken);
    rec.backend_time = solved.wall_time;
    evaluations += solved.evaluations;
    if (params.backend == Backend::kEmbeddedSa) {
      broken_total += broken;
      ++embedded_rounds;
    }

    // sub-energy equals the composite energy by construction of clamp()
    if (solved.energy <= energy) {
      for (std::size_t a = 0; a < k; ++a) x[rec.selected_variables[a]] = solved.assignment[a];
      if (solved.energy < energy) {
        stall = 0;
      } else {
        ++stall;
      }
      energy = solved.energy;
    } else {
      ++stall;
    }
    rec.energy_after = energy;
    out.rounds.push_back(std::move(rec));

    if (single_round || stall >= params.stall_rounds) break;
  }

  out.result.assignment = x;
  out.result.energy = energy;
  out.result.iterations_used = out.rounds.size();
  out.result.evaluations = evaluations;
  out.broken_chain_fraction = embedded_rounds == 0 ? 0.0 : broken_total / static_cast<double>(embedded_rounds);
  out.result.wall_time = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
  return out;
}

void write_round_trace(std::ostream& out, const std::vector<RoundRecord>& rounds) {
  for (const auto& r : rounds) {
    nlohmann::json j = {{"round_index", r.round_index},
                        {"selected_variables", r.selected_variables},
                        {"energy_before", r.energy_before},
                        {"energy_after", r.energy_after},
                        {"backend_time", r.backend_time}};
    out << j.dump() << '\n';
  }
}

}  // namespace subqubo
