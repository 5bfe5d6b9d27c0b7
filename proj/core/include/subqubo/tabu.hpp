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
#include <optional>

#include "subqubo/assignment.hpp"
#include "subqubo/model.hpp"

namespace subqubo {

struct TabuParams {
  // Upper bound of the per-move tenure, which is drawn from [1, tenure].
  std::size_t tenure = 10;
  std::size_t max_iterations = 1000;
  std::size_t stall_limit = 200;
  // Seeds the tenure draws and the random start.
  std::uint64_t seed = 0;
  // Draw the start uniformly from `seed` when none is supplied; otherwise
  // the search starts from all zeros.
  bool random_start = false;
  // Stop as soon as the best energy reaches this value (0 for NPP-derived
  // problems, whose energy is delta^2).
  std::optional<double> target_energy;

  // tenure = max(10, n/10), max_iterations = 50n (at least 500),
  // stall_limit = max(100, 10n).
  static TabuParams defaults_for(std::size_t n);

  // Throws InvalidArgument on zero fields or tenure >= max_iterations.
  void validate() const;
};

template <typename Energy>
struct SolveResult {
  BinaryAssignment assignment;
  Energy energy{};
  std::size_t iterations_used = 0;
  double wall_time = 0.0;  // seconds
  std::size_t evaluations = 0;
};

// E(x with bit i flipped) - E(x), O(n).
template <typename T>
T flip_gain(const BasicQuboMatrix<T>& q, const BinaryAssignment& x, std::size_t i);

// One-flip tabu search. Gains are maintained incrementally; the move taken
// each iteration is the lowest-gain non-tabu flip (lowest index on ties),
// with tabu flips admitted when they beat the best energy seen. The tenure
// bound is capped at n-1 so a legal move always exists.
template <typename T>
SolveResult<T> tabu_search(const BasicQuboMatrix<T>& q, const TabuParams& params,
                           const std::optional<BinaryAssignment>& start = std::nullopt);

// Incremental flip-gain bookkeeping shared by the tabu engine and tests.
template <typename T>
class GainTracker {
 public:
  GainTracker(const BasicQuboMatrix<T>& q, BinaryAssignment x);

  const BinaryAssignment& assignment() const noexcept { return x_; }
  const std::vector<T>& gains() const noexcept { return gains_; }
  T energy() const noexcept { return energy_; }

  // Flip bit i and update every gain in O(n).
  void flip(std::size_t i);

 private:
  const BasicQuboMatrix<T>* q_;
  BinaryAssignment x_;
  std::vector<T> gains_;
  T energy_{};
};

extern template class GainTracker<std::int64_t>;
extern template class GainTracker<double>;

}  // namespace subqubo
