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
#include <string>
#include <vector>

#include "subqubo/assignment.hpp"

namespace subqubo {

// Largest total for which total^2 still fits a signed 64-bit integer.
inline constexpr std::int64_t kMaxInstanceTotal = 3037000499LL;

// Default table-size cap for optimal_delta.
inline constexpr std::int64_t kDefaultOracleCap = 10'000'000;

// A multiset of positive integers to split into two subsets of equal sum.
// Invariants are checked on construction: every value >= 1 and the total
// stays within kMaxInstanceTotal.
class NppInstance {
 public:
  NppInstance() = default;
  explicit NppInstance(std::vector<std::int64_t> values, std::uint64_t seed = 0);

  const std::vector<std::int64_t>& values() const noexcept { return values_; }
  std::int64_t total() const noexcept { return total_; }
  std::uint64_t seed() const noexcept { return seed_; }
  std::size_t size_class() const noexcept { return values_.size(); }
  std::size_t size() const noexcept { return values_.size(); }

  bool operator==(const NppInstance&) const = default;

 private:
  std::vector<std::int64_t> values_;
  std::int64_t total_ = 0;
  std::uint64_t seed_ = 0;
};

// x_i = 1 puts element i in subset A.
using Partition = BinaryAssignment;

// Instance with a zero-delta partition by construction. The first ceil(n/2)
// values are drawn uniformly from [1, max_value]; the remaining floor(n/2)
// values are a uniformly random composition of the same sum. Values are
// shuffled before returning so the perfect split is not positional.
NppInstance generate_perfect(std::size_t n, std::int64_t max_value, std::uint64_t seed);

// |sum_{x_i=1} a_i - sum_{x_i=0} a_i|
std::int64_t delta(const NppInstance& instance, const Partition& p);

// Minimum delta over all 2^n partitions via a bitset subset-sum table over
// [0, total/2]. Throws ResourceLimit when total exceeds `cap`.
std::int64_t optimal_delta(const NppInstance& instance, std::int64_t cap = kDefaultOracleCap);

struct HistogramBin {
  double lower_edge = 0.0;
  std::size_t count = 0;
};

// Equal-width bins over [min, max] of the values; the top edge is closed.
// A degenerate range puts every value in the first bin.
std::vector<HistogramBin> histogram(const NppInstance& instance, std::size_t bins);

}  // namespace subqubo
