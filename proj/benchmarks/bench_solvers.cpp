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

#include <benchmark/benchmark.h>

#include "subqubo/annealer.hpp"
#include "subqubo/hybrid.hpp"
#include "subqubo/instances.hpp"
#include "subqubo/model.hpp"
#include "subqubo/tabu.hpp"

namespace {

using namespace subqubo;

void BM_OptimalDelta(benchmark::State& state) {
  const auto inst = generate_perfect(static_cast<std::size_t>(state.range(0)), 1000, 1);
  for (auto _ : state) benchmark::DoNotOptimize(optimal_delta(inst));
  state.SetComplexityN(state.range(0));
}
BENCHMARK(BM_OptimalDelta)->RangeMultiplier(2)->Range(16, 512)->Complexity();

void BM_TabuSearch(benchmark::State& state) {
  const auto n = static_cast<std::size_t>(state.range(0));
  const QuboMatrix q = build_qubo(generate_perfect(n, 1000, 2));
  TabuParams p = TabuParams::defaults_for(n);
  p.random_start = true;
  std::uint64_t seed = 0;
  for (auto _ : state) {
    p.seed = seed++;
    benchmark::DoNotOptimize(tabu_search(q, p).energy);
  }
}
BENCHMARK(BM_TabuSearch)->RangeMultiplier(2)->Range(16, 256)->Unit(benchmark::kMillisecond);

// One read of 20 us at 100 sweeps per microsecond.
void BM_SaSolve(benchmark::State& state) {
  const auto n = static_cast<std::size_t>(state.range(0));
  const IsingModel model = ising_from_qubo(build_qubo(generate_perfect(n, 100, 3)));
  AnnealParams p = AnnealParams::for_model(model);
  const Schedule schedule = Schedule::linear(20.0);
  for (auto _ : state) {
    ++p.seed;
    benchmark::DoNotOptimize(sa_solve(model, schedule, p).energy);
  }
}
BENCHMARK(BM_SaSolve)->RangeMultiplier(2)->Range(8, 64)->Unit(benchmark::kMillisecond);

void BM_SvmcSolve(benchmark::State& state) {
  const auto n = static_cast<std::size_t>(state.range(0));
  const IsingModel model = ising_from_qubo(build_qubo(generate_perfect(n, 100, 4)));
  AnnealParams p = AnnealParams::for_model(model);
  const Schedule schedule = make_pause_schedule(20.0, 10.0, 40.0);
  for (auto _ : state) {
    ++p.seed;
    benchmark::DoNotOptimize(svmc_solve(model, schedule, p).energy);
  }
}
BENCHMARK(BM_SvmcSolve)->RangeMultiplier(2)->Range(8, 64)->Unit(benchmark::kMillisecond);

void BM_DecomposeSolve(benchmark::State& state) {
  const auto n = static_cast<std::size_t>(state.range(0));
  const QuboMatrix q = build_qubo(generate_perfect(n, 100, 5));
  HybridParams p;
  p.backend = static_cast<Backend>(state.range(1));
  for (auto _ : state) {
    ++p.seed;
    benchmark::DoNotOptimize(decompose_solve(q, p).result.energy);
  }
  state.SetLabel(to_string(p.backend));
}
BENCHMARK(BM_DecomposeSolve)
    ->ArgsProduct({{32, 64, 128}, {static_cast<int>(Backend::kTabu), static_cast<int>(Backend::kSa)}})
    ->Unit(benchmark::kMillisecond);

}  // namespace

BENCHMARK_MAIN();
