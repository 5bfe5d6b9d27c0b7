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
#include <optional>
#include <string>
#include <vector>

#include "subqubo/annealer.hpp"
#include "subqubo/assignment.hpp"
#include "subqubo/model.hpp"
#include "subqubo/rng.hpp"
#include "subqubo/tabu.hpp"

namespace subqubo {

enum class Backend { kTabu, kSa, kSvmc, kEmbeddedSa };

std::string to_string(Backend backend);
// Accepts "tabu", "sa", "svmc", "embedded_sa".
Backend parse_backend(const std::string& name);

// Sub-QUBOs at or below this size are enumerated exactly when the backend
// is tabu.
inline constexpr std::size_t kExactSubproblemLimit = 20;

struct HybridParams {
  std::size_t subproblem_size = 16;
  Backend backend = Backend::kTabu;
  std::size_t max_rounds = 50;
  std::size_t stall_rounds = 10;
  std::uint64_t seed = 0;
  // Share of the subproblem slots filled with uniformly random variables.
  double random_fraction = 0.1;
  // Stop once the composite energy reaches this value. delta^2 >= 0 makes
  // 0 a valid bound for every QUBO built from an instance.
  std::optional<std::int64_t> target_energy = 0;

  // Backend blocks. Unset tabu fields fall back to TabuParams::defaults_for
  // the subproblem size; anneal betas are rescaled per subproblem unless
  // fixed_betas is set.
  std::optional<TabuParams> tabu;
  AnnealParams anneal{.sweeps_per_microsecond = 10};
  bool fixed_betas = false;
  double anneal_time = 20.0;  // microseconds, linear ramp
  // Replaces the linear ramp when set.
  std::optional<Schedule> schedule;
  // Chimera grid for embedded_sa; 0 picks the smallest grid that fits.
  std::size_t chimera_m = 0;
  // 0 uses default_chain_strength of each subproblem.
  double chain_strength = 0.0;

  void validate() const;
};

struct RoundRecord {
  std::size_t round_index = 0;
  std::vector<std::size_t> selected_variables;
  std::int64_t energy_before = 0;
  std::int64_t energy_after = 0;
  double backend_time = 0.0;  // seconds
};

struct HybridResult {
  SolveResult<std::int64_t> result;
  std::vector<RoundRecord> rounds;
  // State after the initial tabu pass, before any decomposition round.
  BinaryAssignment initial_assignment;
  // Mean chain-break fraction over embedded_sa rounds; 0 for other backends.
  double broken_chain_fraction = 0.0;
};

// k distinct indices, sorted ascending. floor(random_fraction * k) slots are
// drawn uniformly from the variables not picked by gain; the rest are the
// largest |flip_gain| values, lowest index first on ties.
std::vector<std::size_t> select_subproblem(const QuboMatrix& q, const BinaryAssignment& x, std::size_t k, Rng& rng,
                                           double random_fraction = 0.1);

// Sub-QUBO over `free` (in the given order) with every other variable fixed
// at its value in x. The clamped couplings fold into the diagonal and the
// clamped energy into the offset, so the sub-energy of y equals the full
// energy of x with the free variables replaced by y.
QuboMatrix clamp(const QuboMatrix& q, const BinaryAssignment& x, const std::vector<std::size_t>& free);

// Exact minimum by Gray-code enumeration; the first minimum met in Gray
// order wins ties. Throws ResourceLimit above 30 variables.
SolveResult<std::int64_t> exhaustive_solve(const QuboMatrix& q);

// Solve one (sub-)QUBO with the configured backend. Tabu starts from
// `start`; the samplers ignore it, but `start` stays a candidate so the
// result is never worse than it. The energy is re-evaluated exactly on q.
SolveResult<std::int64_t> solve_with_backend(const QuboMatrix& q, const BinaryAssignment& start,
                                             const HybridParams& params, std::uint64_t seed,
                                             double* broken_chains = nullptr);

// Decomposition loop: random start improved by tabu on the full problem,
// then rounds of select / clamp / backend solve, keeping a sub-solution
// only if the composite energy does not rise. Stops on max_rounds,
// stall_rounds rounds without improvement, or target_energy. When the
// subproblem covers every variable a single round is run.
HybridResult decompose_solve(const QuboMatrix& q, const HybridParams& params);

// Backend seed used in round r of decompose_solve.
std::uint64_t round_seed(std::uint64_t seed, std::size_t round);

// One JSON object per line.
void write_round_trace(std::ostream& out, const std::vector<RoundRecord>& rounds);

}  // namespace subqubo
