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

#include <gtest/gtest.h>

#include <numeric>
#include <sstream>

#include "json.hpp"
#include "oracles.hpp"
#include "subqubo/error.hpp"

namespace subqubo {
namespace {

using testing::bits_of;

TEST(SelectSubproblemTest, FullSelection) {
  Rng rng(1);
  const QuboMatrix q = build_qubo(generate_perfect(10, 20, 1));
  std::vector<std::size_t> all(10);
  std::iota(all.begin(), all.end(), std::size_t{0});
  EXPECT_EQ(select_subproblem(q, BinaryAssignment(10, 0), 10, rng), all);
}

TEST(SelectSubproblemTest, TieGoesToLowestIndex) {
  Rng rng(1);
  const QuboMatrix q = build_qubo(NppInstance({1, 2}));
  EXPECT_EQ(select_subproblem(q, {0, 0}, 1, rng, 0.0), (std::vector<std::size_t>{0}));
}

TEST(SelectSubproblemTest, RanksByGainMagnitude) {
  Rng rng(1);
  QuboMatrix q(4);
  q.set(0, 0, 1);
  q.set(1, 1, -7);
  q.set(2, 2, 3);
  q.set(3, 3, 7);
  EXPECT_EQ(select_subproblem(q, BinaryAssignment(4, 0), 2, rng, 0.0), (std::vector<std::size_t>{1, 3}));
}

TEST(SelectSubproblemTest, FlatQuboDeterministicPerSeed) {
  const QuboMatrix q(20);
  Rng a(5), b(5);
  const auto first = select_subproblem(q, BinaryAssignment(20, 0), 8, a, 0.5);
  const auto second = select_subproblem(q, BinaryAssignment(20, 0), 8, b, 0.5);
  EXPECT_EQ(first, second);
  EXPECT_EQ(first.size(), 8U);
  EXPECT_TRUE(std::is_sorted(first.begin(), first.end()));
  EXPECT_EQ(std::adjacent_find(first.begin(), first.end()), first.end());
}

TEST(SelectSubproblemTest, RandomSlotsStayDistinct) {
  Rng rng(9);
  const QuboMatrix q = build_qubo(generate_perfect(30, 50, 2));
  for (int trial = 0; trial < 50; ++trial) {
    const auto picked = select_subproblem(q, testing::random_bits(rng, 30), 16, rng, 0.25);
    EXPECT_EQ(picked.size(), 16U);
    EXPECT_EQ(std::adjacent_find(picked.begin(), picked.end()), picked.end());
  }
}

TEST(SelectSubproblemTest, OversizedRequestThrows) {
  Rng rng(1);
  EXPECT_THROW(select_subproblem(QuboMatrix(3), {0, 0, 0}, 4, rng), InvalidArgument);
}

TEST(ClampTest, AllFreeIsIdentity) {
  Rng rng(2);
  const auto q = testing::random_qubo<std::int64_t>(rng, 6, 20);
  std::vector<std::size_t> all(6);
  std::iota(all.begin(), all.end(), std::size_t{0});
  EXPECT_EQ(clamp(q, testing::random_bits(rng, 6), all), q);
}

TEST(ClampTest, ThreeElementExample) {
  const QuboMatrix q = build_qubo(NppInstance({1, 2, 3}));
  const BinaryAssignment x{0, 0, 1};
  const QuboMatrix sub = clamp(q, x, {0, 1});
  ASSERT_EQ(sub.size(), 2U);
  for (std::uint64_t mask = 0; mask < 4; ++mask) {
    const auto y = bits_of(mask, 2);
    EXPECT_EQ(qubo_energy(sub, y), qubo_energy(q, {y[0], y[1], 1}));
  }
}

TEST(ClampTest, NothingFreeIsConstant) {
  Rng rng(3);
  const auto q = testing::random_qubo<std::int64_t>(rng, 7, 20);
  const auto x = testing::random_bits(rng, 7);
  const QuboMatrix sub = clamp(q, x, {});
  EXPECT_EQ(sub.size(), 0U);
  EXPECT_EQ(sub.offset(), qubo_energy(q, x));
}

TEST(ClampTest, CompositeEnergyExhaustively) {
  Rng rng(4);
  for (int trial = 0; trial < 60; ++trial) {
    const std::size_t n = 1 + rng.below(12);
    const auto q = testing::random_qubo<std::int64_t>(rng, n, 30);
    const auto x = testing::random_bits(rng, n);
    std::vector<std::size_t> free;
    for (std::size_t i = 0; i < n; ++i) {
      if (rng.coin()) free.push_back(i);
    }
    // unsorted order must work as well
    if (trial % 2 == 1) std::reverse(free.begin(), free.end());
    const QuboMatrix sub = clamp(q, x, free);
    for (std::uint64_t mask = 0; mask < (std::uint64_t{1} << free.size()); ++mask) {
      const auto y = bits_of(mask, free.size());
      auto full = x;
      for (std::size_t a = 0; a < free.size(); ++a) full[free[a]] = y[a];
      ASSERT_EQ(qubo_energy(sub, y), testing::naive_qubo_energy(q, full));
    }
  }
}

TEST(ClampTest, InvalidIndicesThrow) {
  const QuboMatrix q(4);
  EXPECT_THROW(clamp(q, BinaryAssignment(4, 0), {4}), InvalidArgument);
  EXPECT_THROW(clamp(q, BinaryAssignment(4, 0), {1, 1}), InvalidArgument);
  EXPECT_THROW(clamp(q, BinaryAssignment(3, 0), {1}), InvalidArgument);
}

TEST(ExhaustiveSolveTest, MatchesBruteForce) {
  Rng rng(5);
  for (int trial = 0; trial < 20; ++trial) {
    const auto q = testing::random_qubo<std::int64_t>(rng, rng.below(13), 40);
    const auto r = exhaustive_solve(q);
    EXPECT_EQ(r.energy, testing::brute_qubo_min(q));
    EXPECT_EQ(qubo_energy(q, r.assignment), r.energy);
  }
}

HybridParams tabu_params(std::uint64_t seed, std::size_t k = 16) {
  HybridParams p;
  p.subproblem_size = k;
  p.seed = seed;
  return p;
}

TEST(DecomposeSolveTest, SmallProblemRunsSingleRound) {
  const QuboMatrix q = build_qubo(NppInstance({1, 2, 4, 8, 16, 3}));
  HybridParams p = tabu_params(3);
  p.target_energy.reset();
  const auto r = decompose_solve(q, p);
  EXPECT_EQ(r.rounds.size(), 1U);
  EXPECT_EQ(r.result.energy, testing::brute_qubo_min(q));
}

TEST(DecomposeSolveTest, DegenerateEquivalenceWithBackend) {
  const QuboMatrix q = build_qubo(generate_perfect(12, 500, 8));
  for (Backend b : {Backend::kTabu, Backend::kSa, Backend::kSvmc, Backend::kEmbeddedSa}) {
    HybridParams p = tabu_params(21, 12);
    p.backend = b;
    p.random_fraction = 0.0;
    p.target_energy.reset();
    const auto r = decompose_solve(q, p);
    const auto direct = solve_with_backend(q, r.initial_assignment, p, round_seed(p.seed, 0));
    EXPECT_EQ(r.result.energy, direct.energy) << to_string(b);
  }
}

TEST(DecomposeSolveTest, ThirtyVariablePerfectInstance) {
  int hits = 0;
  for (std::uint64_t seed = 0; seed < 5; ++seed) {
    const auto inst = generate_perfect(30, 100, 40 + seed);
    const auto r = decompose_solve(build_qubo(inst), tabu_params(seed));
    if (delta(inst, r.result.assignment) == optimal_delta(inst)) ++hits;
  }
  EXPECT_GE(hits, 1);
}

TEST(DecomposeSolveTest, EmbeddedBackendOnFortyEight) {
  const auto inst = generate_perfect(48, 100, 77);
  HybridParams p = tabu_params(4, 8);
  p.backend = Backend::kEmbeddedSa;
  p.chimera_m = 2;
  p.max_rounds = 10;
  p.stall_rounds = 10;
  const auto r = decompose_solve(build_qubo(inst), p);
  const auto d = delta(inst, r.result.assignment);
  EXPECT_EQ(d % 2, inst.total() % 2);
  EXPECT_GE(d, optimal_delta(inst));
  EXPECT_EQ(r.result.energy, d * d);
  EXPECT_GE(r.broken_chain_fraction, 0.0);
  EXPECT_LE(r.broken_chain_fraction, 1.0);
}

TEST(DecomposeSolveTest, RoundsNeverIncreaseEnergy) {
  const auto inst = generate_perfect(60, 1000, 5);
  for (Backend b : {Backend::kTabu, Backend::kSa, Backend::kSvmc}) {
    HybridParams p = tabu_params(6, 10);
    p.backend = b;
    p.max_rounds = 15;
    p.stall_rounds = 15;
    p.target_energy.reset();
    const auto r = decompose_solve(build_qubo(inst), p);
    ASSERT_FALSE(r.rounds.empty());
    std::int64_t previous = r.rounds.front().energy_before;
    for (const auto& rec : r.rounds) {
      EXPECT_LE(rec.energy_after, rec.energy_before);
      EXPECT_EQ(rec.energy_before, previous);
      EXPECT_EQ(rec.selected_variables.size(), 10U);
      previous = rec.energy_after;
    }
    EXPECT_EQ(r.result.energy, previous);
  }
}

TEST(DecomposeSolveTest, DeterministicPerSeed) {
  const QuboMatrix q = build_qubo(generate_perfect(40, 1000, 6));
  HybridParams p = tabu_params(7, 12);
  p.backend = Backend::kSa;
  p.max_rounds = 8;
  p.stall_rounds = 8;
  const auto a = decompose_solve(q, p);
  const auto b = decompose_solve(q, p);
  EXPECT_EQ(a.result.assignment, b.result.assignment);
  ASSERT_EQ(a.rounds.size(), b.rounds.size());
  for (std::size_t i = 0; i < a.rounds.size(); ++i) {
    EXPECT_EQ(a.rounds[i].selected_variables, b.rounds[i].selected_variables);
    EXPECT_EQ(a.rounds[i].energy_after, b.rounds[i].energy_after);
  }
}

TEST(DecomposeSolveTest, PerfectInstancesAtDeskScale) {
  for (std::size_t n : {8U, 16U, 24U, 32U}) {
    int hits = 0;
    for (std::uint64_t seed = 0; seed < 10; ++seed) {
      const auto inst = generate_perfect(n, 100, derive_seed(2024, {n, seed}));
      if (delta(inst, decompose_solve(build_qubo(inst), tabu_params(seed)).result.assignment) == 0) ++hits;
    }
    EXPECT_GE(hits, 8) << "n=" << n;
  }
}

TEST(HybridParamsTest, Validation) {
  HybridParams p;
  p.subproblem_size = 0;
  EXPECT_THROW(p.validate(), InvalidArgument);
  p = HybridParams{};
  p.stall_rounds = p.max_rounds + 1;
  EXPECT_THROW(p.validate(), InvalidArgument);
  p = HybridParams{};
  p.random_fraction = 1.5;
  EXPECT_THROW(p.validate(), InvalidArgument);
  EXPECT_THROW(parse_backend("qpu"), InvalidArgument);
  EXPECT_EQ(parse_backend("embedded_sa"), Backend::kEmbeddedSa);
}

TEST(RoundTraceTest, JsonLines) {
  std::vector<RoundRecord> rounds(2);
  rounds[0].selected_variables = {1, 4};
  rounds[0].energy_before = 10;
  rounds[0].energy_after = 4;
  rounds[1].round_index = 1;
  rounds[1].energy_before = 4;
  rounds[1].energy_after = 4;
  std::ostringstream out;
  write_round_trace(out, rounds);
  std::istringstream in(out.str());
  std::string line;
  std::size_t count = 0;
  while (std::getline(in, line)) {
    const auto j = nlohmann::json::parse(line);
    EXPECT_EQ(j.at("round_index").get<std::size_t>(), count);
    EXPECT_LE(j.at("energy_after").get<std::int64_t>(), j.at("energy_before").get<std::int64_t>());
    ++count;
  }
  EXPECT_EQ(count, 2U);
}

}  // namespace
}  // namespace subqubo
