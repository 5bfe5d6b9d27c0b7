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

#include "subqubo/tabu.hpp"

#include <algorithm>
#include <chrono>
#include <string>

#include "subqubo/error.hpp"
#include "subqubo/rng.hpp"

namespace subqubo {

TabuParams TabuParams::defaults_for(std::size_t n) {
  TabuParams p;
  p.tenure = std::max<std::size_t>(10, n / 10);
  p.max_iterations = std::max<std::size_t>(500, 50 * n);
  p.stall_limit = std::max<std::size_t>(100, 10 * n);
  return p;
}

void TabuParams::validate() const {
  if (tenure == 0 || max_iterations == 0 || stall_limit == 0) {
    throw InvalidArgument("tabu tenure, max_iterations and stall_limit must be positive");
  }
  if (tenure >= max_iterations) {
    throw InvalidArgument("tabu tenure (" + std::to_string(tenure) + ") must be below max_iterations (" +
                          std::to_string(max_iterations) + ")");
  }
}

template <typename T>
T flip_gain(const BasicQuboMatrix<T>& q, const BinaryAssignment& x, std::size_t i) {
  if (x.size() != q.size()) {
    throw InvalidArgument("assignment has " + std::to_string(x.size()) + " entries, QUBO has " +
                          std::to_string(q.size()));
  }
  if (i >= q.size()) {
    throw InvalidArgument("flip index " + std::to_string(i) + " out of range for n=" +
                          std::to_string(q.size()));
  }
  const auto row = q.row(i);
  T field = row[i];
  for (std::size_t j = 0; j < x.size(); ++j) {
    if (j != i && x[j]) field += row[j];
  }
  return x[i] ? -field : field;
}

template std::int64_t flip_gain(const QuboMatrix&, const BinaryAssignment&, std::size_t);
template double flip_gain(const RealQuboMatrix&, const BinaryAssignment&, std::size_t);

template <typename T>
GainTracker<T>::GainTracker(const BasicQuboMatrix<T>& q, BinaryAssignment x)
    : q_(&q), x_(std::move(x)), gains_(q.size()) {
  energy_ = qubo_energy(q, x_);
  for (std::size_t i = 0; i < x_.size(); ++i) gains_[i] = flip_gain(q, x_, i);
}

template <typename T>
void GainTracker<T>::flip(std::size_t i) {
  const auto row = q_->row(i);
  energy_ += gains_[i];
  const bool was_set = x_[i] != 0;
  x_[i] = was_set ? 0 : 1;
  for (std::size_t j = 0; j < x_.size(); ++j) {
    if (j == i) continue;
    // field_j moves by +Q_ij when x_i turns on, -Q_ij when it turns off;
    // the gain carries the sign (1 - 2 x_j).
    const T change = was_set ? -row[j] : row[j];
    gains_[j] += x_[j] ? -change : change;
  }
  gains_[i] = -gains_[i];
}

template class GainTracker<std::int64_t>;
template class GainTracker<double>;

template <typename T>
SolveResult<T> tabu_search(const BasicQuboMatrix<T>& q, const TabuParams& params,
                           const std::optional<BinaryAssignment>& start) {
  params.validate();
  const auto t0 = std::chrono::steady_clock::now();
  const std::size_t n = q.size();

  Rng rng(params.seed);
  BinaryAssignment x0;
  if (start) {
    if (start->size() != n) {
      throw InvalidArgument("start assignment has " + std::to_string(start->size()) +
                            " entries, QUBO has " + std::to_string(n));
    }
    check_binary(*start);
    x0 = *start;
  } else if (params.random_start) {
    x0.resize(n);
    for (auto& v : x0) v = rng.coin() ? 1 : 0;
  } else {
    x0.assign(n, 0);
  }

  GainTracker<T> tracker(q, std::move(x0));
  SolveResult<T> result;
  result.assignment = tracker.assignment();
  result.energy = tracker.energy();
  result.evaluations = n;

  const auto reached_target = [&](T e) {
    return params.target_energy && static_cast<double>(e) <= *params.target_energy;
  };

  if (n == 0 || reached_target(result.energy)) {
    result.wall_time = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
    return result;
  }

  const std::size_t tenure = std::min(params.tenure, n - 1);
  // tabu_until[i] > iteration means variable i is tabu
  std::vector<std::size_t> tabu_until(n, 0);
  std::size_t stall = 0;
  std::size_t iteration = 0;

  while (iteration < params.max_iterations) {
    ++iteration;
    const auto& gains = tracker.gains();
    std::size_t chosen = n;
    for (std::size_t i = 0; i < n; ++i) {
      const bool tabu = tabu_until[i] > iteration;
      const bool aspirates = tracker.energy() + gains[i] < result.energy;
      if (tabu && !aspirates) continue;
      if (chosen == n || gains[i] < gains[chosen]) chosen = i;
    }
    result.evaluations += n;
    if (chosen == n) break;  // unreachable: tenure <= n-1 leaves a legal move

    tracker.flip(chosen);
    // A fixed tenure makes the walk cycle on small problems; drawing it per
    // move from [1, tenure] breaks the cycles.
    tabu_until[chosen] = iteration + 1 + (tenure == 0 ? 0 : 1 + rng.below(tenure));

    if (tracker.energy() < result.energy) {
      result.energy = tracker.energy();
      result.assignment = tracker.assignment();
      stall = 0;
      if (reached_target(result.energy)) break;
    } else if (++stall >= params.stall_limit) {
      break;
    }
  }

  result.iterations_used = iteration;
  result.wall_time = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
  return result;
}

template SolveResult<std::int64_t> tabu_search(const QuboMatrix&, const TabuParams&,
                                               const std::optional<BinaryAssignment>&);
template SolveResult<double> tabu_search(const RealQuboMatrix&, const TabuParams&,
                                         const std::optional<BinaryAssignment>&);

}  // namespace subqubo
