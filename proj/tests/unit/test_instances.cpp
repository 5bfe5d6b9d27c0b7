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

#include "subqubo/instances.hpp"

#include <gtest/gtest.h>

#include <numeric>

#include "oracles.hpp"
#include "subqubo/error.hpp"

namespace subqubo {
namespace {

using testing::brute_delta;
using testing::brute_optimal_delta;

Partition complement(Partition p) {
  for (auto& b : p) b = b ? 0 : 1;
  return p;
}

TEST(NppInstanceTest, RejectsNonPositiveValues) {
  EXPECT_THROW(NppInstance({3, 0, 2}), InvalidArgument);
  EXPECT_THROW(NppInstance({-1}), InvalidArgument);
}

TEST(NppInstanceTest, RejectsOverflowingTotal) {
  EXPECT_THROW(NppInstance({kMaxInstanceTotal, 1}), InvalidArgument);
  EXPECT_NO_THROW(NppInstance({kMaxInstanceTotal}));
}

TEST(NppInstanceTest, TotalAndSizeClass) {
  const NppInstance inst({4, 5, 6}, 42);
  EXPECT_EQ(inst.total(), 15);
  EXPECT_EQ(inst.size_class(), 3U);
  EXPECT_EQ(inst.seed(), 42U);
}

TEST(GeneratePerfectTest, TwoElementsAreAnEqualPair) {
  const auto inst = generate_perfect(2, 10, 7);
  ASSERT_EQ(inst.size(), 2U);
  EXPECT_EQ(inst.values()[0], inst.values()[1]);
  EXPECT_GE(inst.values()[0], 1);
  EXPECT_LE(inst.values()[0], 10);
}

TEST(GeneratePerfectTest, FourValuesHaveEvenTotalAndZeroDelta) {
  const auto inst = generate_perfect(4, 5, 3);
  ASSERT_EQ(inst.size(), 4U);
  EXPECT_EQ(inst.total() % 2, 0);
  EXPECT_EQ(brute_optimal_delta(inst.values()), 0);
}

TEST(GeneratePerfectTest, HundredValuesHaveZeroOracleDelta) {
  const auto inst = generate_perfect(100, 100, 1);
  EXPECT_EQ(inst.size_class(), 100U);
  EXPECT_EQ(optimal_delta(inst), 0);
}

TEST(GeneratePerfectTest, RejectsTooFewElements) {
  EXPECT_THROW(generate_perfect(1, 10, 0), InvalidArgument);
  EXPECT_THROW(generate_perfect(0, 10, 0), InvalidArgument);
  EXPECT_THROW(generate_perfect(4, 0, 0), InvalidArgument);
}

TEST(GeneratePerfectTest, DeterministicInArguments) {
  EXPECT_EQ(generate_perfect(37, 50, 9), generate_perfect(37, 50, 9));
  EXPECT_NE(generate_perfect(37, 50, 9), generate_perfect(37, 50, 10));
}

TEST(GeneratePerfectTest, OddSizesAndManySeedsArePerfect) {
  for (std::size_t n : {2U, 3U, 5U, 8U, 13U, 17U}) {
    for (std::uint64_t seed = 0; seed < 20; ++seed) {
      const auto inst = generate_perfect(n, 30, seed);
      ASSERT_EQ(inst.size(), n);
      EXPECT_EQ(brute_optimal_delta(inst.values()), 0) << "n=" << n << " seed=" << seed;
      EXPECT_EQ(optimal_delta(inst), 0);
    }
  }
}

TEST(DeltaTest, SpecExamples) {
  EXPECT_EQ(delta(NppInstance({1, 2, 3}), {0, 0, 1}), 0);
  EXPECT_EQ(delta(NppInstance({5}), {0}), 5);
  EXPECT_EQ(delta(NppInstance({4, 5, 6, 7, 8}), {0, 0, 0, 1, 1}), 0);
}

TEST(DeltaTest, LengthMismatchThrows) {
  EXPECT_THROW(delta(NppInstance({1, 2}), {1}), InvalidArgument);
  EXPECT_THROW(delta(NppInstance({1, 2}), {1, 2}), InvalidArgument);
}

TEST(DeltaTest, ComplementSymmetryAndParity) {
  Rng rng(5);
  for (int trial = 0; trial < 200; ++trial) {
    const NppInstance inst(testing::random_values(rng, 1 + rng.below(15), 1000));
    const Partition p = testing::random_bits(rng, inst.size());
    const auto d = delta(inst, p);
    EXPECT_EQ(d, delta(inst, complement(p)));
    EXPECT_EQ(d % 2, inst.total() % 2);
  }
}

TEST(OptimalDeltaTest, SmallExamples) {
  EXPECT_EQ(optimal_delta(NppInstance({9, 9})), 0);
  EXPECT_EQ(optimal_delta(NppInstance({3, 1, 1})), 1);
  EXPECT_EQ(optimal_delta(NppInstance({7})), 7);
  EXPECT_EQ(optimal_delta(NppInstance{}), 0);
}

TEST(OptimalDeltaTest, MatchesEnumerationOnRandomInstances) {
  Rng rng(11);
  for (int trial = 0; trial < 150; ++trial) {
    const std::size_t n = 1 + rng.below(16);
    // mix of small and word-boundary-crossing totals
    const std::int64_t max_value = trial % 3 == 0 ? 7 : trial % 3 == 1 ? 130 : 5000;
    const NppInstance inst(testing::random_values(rng, n, max_value));
    const auto got = optimal_delta(inst);
    EXPECT_EQ(got, brute_optimal_delta(inst.values())) << "trial " << trial;
    EXPECT_EQ(got % 2, inst.total() % 2);
  }
}

TEST(OptimalDeltaTest, CapExceededIsResourceLimit) {
  const NppInstance inst({600, 500});
  EXPECT_THROW(optimal_delta(inst, 1000), ResourceLimit);
  EXPECT_EQ(optimal_delta(inst, 1100), 100);
}

TEST(HistogramTest, SingleBin) {
  const auto h = histogram(NppInstance({1, 1, 1}), 1);
  ASSERT_EQ(h.size(), 1U);
  EXPECT_DOUBLE_EQ(h[0].lower_edge, 1.0);
  EXPECT_EQ(h[0].count, 3U);
}

TEST(HistogramTest, TwoBinsOverOneToFour) {
  const auto h = histogram(NppInstance({1, 2, 3, 4}), 2);
  ASSERT_EQ(h.size(), 2U);
  EXPECT_DOUBLE_EQ(h[0].lower_edge, 1.0);
  EXPECT_EQ(h[0].count, 2U);
  EXPECT_DOUBLE_EQ(h[1].lower_edge, 2.5);
  EXPECT_EQ(h[1].count, 2U);
}

TEST(HistogramTest, DegenerateRange) {
  const auto h = histogram(NppInstance({10}), 3);
  ASSERT_EQ(h.size(), 3U);
  std::size_t total = 0;
  for (const auto& b : h) {
    EXPECT_DOUBLE_EQ(b.lower_edge, 10.0);
    total += b.count;
  }
  EXPECT_EQ(total, 1U);
  EXPECT_THROW(histogram(NppInstance({10}), 0), InvalidArgument);
}

TEST(HistogramTest, CountsSumToSize) {
  const auto inst = generate_perfect(200, 1000, 3);
  const auto h = histogram(inst, 17);
  const std::size_t total =
      std::accumulate(h.begin(), h.end(), std::size_t{0}, [](std::size_t s, const HistogramBin& b) { return s + b.count; });
  EXPECT_EQ(total, 200U);
}

}  // namespace
}  // namespace subqubo
