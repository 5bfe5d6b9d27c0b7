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

// Brute-force reference routines for tests. Nothing here calls into the
// library code paths being checked: energies are evaluated from the sums
// directly and optima by full enumeration.

#include <cstdint>
#include <limits>
#include <vector>

#include "subqubo/assignment.hpp"
#include "subqubo/instances.hpp"
#include "subqubo/model.hpp"
#include "subqubo/rng.hpp"

namespace subqubo::testing {

inline BinaryAssignment bits_of(std::uint64_t mask, std::size_t n) {
  BinaryAssignment x(n);
  for (std::size_t i = 0; i < n; ++i) x[i] = static_cast<std::uint8_t>((mask >> i) & 1U);
  return x;
}

// |sum_A - sum_rest| straight from the definition.
inline std::int64_t brute_delta(const std::vector<std::int64_t>& values, std::uint64_t mask) {
  std::int64_t a = 0, b = 0;
  for (std::size_t i = 0; i < values.size(); ++i) ((mask >> i) & 1U ? a : b) += values[i];
  return a > b ? a - b : b - a;
}

inline std::int64_t brute_optimal_delta(const std::vector<std::int64_t>& values) {
  std::int64_t best = std::numeric_limits<std::int64_t>::max();
  for (std::uint64_t mask = 0; mask < (std::uint64_t{1} << values.size()); ++mask) {
    best = std::min(best, brute_delta(values, mask));
  }
  return best;
}

// Upper-triangle double sum, no incremental tricks.
template <typename T>
T naive_qubo_energy(const BasicQuboMatrix<T>& q, const BinaryAssignment& x) {
  T e = q.offset();
  for (std::size_t i = 0; i < q.size(); ++i) {
    for (std::size_t j = i; j < q.size(); ++j) {
      if (x[i] && x[j]) e += q.at(i, j);
    }
  }
  return e;
}

template <typename T>
T brute_qubo_min(const BasicQuboMatrix<T>& q) {
  T best = naive_qubo_energy(q, bits_of(0, q.size()));
  for (std::uint64_t mask = 1; mask < (std::uint64_t{1} << q.size()); ++mask) {
    best = std::min(best, naive_qubo_energy(q, bits_of(mask, q.size())));
  }
  return best;
}

inline double naive_ising_energy(const IsingModel& m, const SpinAssignment& s) {
  double e = m.offset();
  for (std::size_t i = 0; i < m.size(); ++i) e += m.h()[i] * s[i];
  for (const auto& [edge, c] : m.couplers()) e += c * s[edge.first] * s[edge.second];
  return e;
}

inline SpinAssignment spins_of(std::uint64_t mask, std::size_t n) {
  SpinAssignment s(n);
  for (std::size_t i = 0; i < n; ++i) s[i] = ((mask >> i) & 1U) ? 1 : -1;
  return s;
}

inline double brute_ising_min(const IsingModel& m) {
  double best = std::numeric_limits<double>::infinity();
  for (std::uint64_t mask = 0; mask < (std::uint64_t{1} << m.size()); ++mask) {
    best = std::min(best, naive_ising_energy(m, spins_of(mask, m.size())));
  }
  return best;
}

inline std::vector<std::int64_t> random_values(Rng& rng, std::size_t n, std::int64_t max_value) {
  std::vector<std::int64_t> v(n);
  for (auto& a : v) a = rng.between(1, max_value);
  return v;
}

template <typename T>
BasicQuboMatrix<T> random_qubo(Rng& rng, std::size_t n, std::int64_t magnitude) {
  BasicQuboMatrix<T> q(n, static_cast<T>(rng.between(-magnitude, magnitude)));
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = i; j < n; ++j) q.set(i, j, static_cast<T>(rng.between(-magnitude, magnitude)));
  }
  return q;
}

inline BinaryAssignment random_bits(Rng& rng, std::size_t n) {
  BinaryAssignment x(n);
  for (auto& b : x) b = rng.coin() ? 1 : 0;
  return x;
}

}  // namespace subqubo::testing
