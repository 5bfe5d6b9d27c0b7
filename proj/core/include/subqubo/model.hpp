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
#include <map>
#include <span>
#include <utility>
#include <vector>

#include "subqubo/assignment.hpp"
#include "subqubo/instances.hpp"

namespace subqubo {

// Largest instance total accepted by build_qubo: keeps 8 * total^2 and every
// partial energy sum inside a signed 64-bit integer.
inline constexpr std::int64_t kMaxQuboTotal = 1'000'000'000LL;

// Upper-triangular QUBO  E(x) = sum_{i<=j} Q_ij x_i x_j + offset.
//
// Storage is dense. The public view is strictly the upper triangle (at()
// and set() reject i > j); internally each coupling is mirrored so that
// row(i) gives contiguous access to every coefficient touching variable i.
template <typename T>
class BasicQuboMatrix {
 public:
  using value_type = T;

  BasicQuboMatrix() = default;
  explicit BasicQuboMatrix(std::size_t n, T offset = T{})
      : n_(n), data_(n * n, T{}), offset_(offset) {}

  std::size_t size() const noexcept { return n_; }

  T at(std::size_t i, std::size_t j) const;
  void set(std::size_t i, std::size_t j, T value);
  void add(std::size_t i, std::size_t j, T value);

  // Coefficient of the pair {i, j} regardless of order; Q_ii when i == j.
  T coupling(std::size_t i, std::size_t j) const noexcept { return data_[i * n_ + j]; }
  std::span<const T> row(std::size_t i) const noexcept { return {data_.data() + i * n_, n_}; }

  T offset() const noexcept { return offset_; }
  void set_offset(T offset) noexcept { offset_ = offset; }

  bool operator==(const BasicQuboMatrix&) const = default;

 private:
  void check_index(std::size_t i, std::size_t j) const;

  std::size_t n_ = 0;
  std::vector<T> data_;
  T offset_{};
};

// Exact integer form used for everything derived from an NppInstance.
using QuboMatrix = BasicQuboMatrix<std::int64_t>;
// Floating-point form for models produced from Ising couplings.
using RealQuboMatrix = BasicQuboMatrix<double>;

// Ising model  E(s) = sum_i h_i s_i + sum_{i<j} c_ij s_i s_j + offset over
// an arbitrary sparse interaction graph.
class IsingModel {
 public:
  using Edge = std::pair<std::size_t, std::size_t>;

  IsingModel() = default;
  explicit IsingModel(std::size_t n, double offset = 0.0) : h_(n, 0.0), offset_(offset) {}

  std::size_t size() const noexcept { return h_.size(); }

  const std::vector<double>& h() const noexcept { return h_; }
  double h(std::size_t i) const { return h_.at(i); }
  void set_h(std::size_t i, double value);
  void add_h(std::size_t i, double value);

  // Keys are normalised to (min, max); self-couplers are rejected.
  const std::map<Edge, double>& couplers() const noexcept { return couplers_; }
  double coupler(std::size_t i, std::size_t j) const;
  void add_coupler(std::size_t i, std::size_t j, double value);

  double offset() const noexcept { return offset_; }
  void set_offset(double offset) noexcept { offset_ = offset; }
  void add_offset(double value) noexcept { offset_ += value; }

  // Largest |h_i| or |c_ij|; 0 for an empty model.
  double max_abs_coefficient() const noexcept;

  std::vector<Edge> edges() const;

 private:
  std::vector<double> h_;
  std::map<Edge, double> couplers_;
  double offset_ = 0.0;
};

// Adjacency-list view of an IsingModel for samplers.
struct IsingAdjacency {
  std::vector<std::vector<std::size_t>> neighbors;
  std::vector<std::vector<double>> weights;

  explicit IsingAdjacency(const IsingModel& model);
};

// Expansion of (sum_i a_i S_i)^2 with S_i = 2 x_i - 1:
//   Q_ii = 4 a_i (a_i - c),  Q_ij = 8 a_i a_j (i < j),  offset = c^2
// so qubo_energy(build_qubo(inst), x) == delta(inst, x)^2.
// Throws ResourceLimit when the total exceeds kMaxQuboTotal.
QuboMatrix build_qubo(const NppInstance& instance);

template <typename T>
T qubo_energy(const BasicQuboMatrix<T>& q, const BinaryAssignment& x);

double ising_energy(const IsingModel& model, const SpinAssignment& s);

// Energy-preserving conversions under q = (S + 1) / 2.
template <typename T>
IsingModel ising_from_qubo(const BasicQuboMatrix<T>& q);
RealQuboMatrix qubo_from_ising(const IsingModel& model);

extern template class BasicQuboMatrix<std::int64_t>;
extern template class BasicQuboMatrix<double>;

}  // namespace subqubo
