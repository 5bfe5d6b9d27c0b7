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

#include "subqubo/model.hpp"

#include <algorithm>
#include <cmath>
#include <string>

#include "subqubo/error.hpp"

namespace subqubo {

void check_binary(const BinaryAssignment& x) {
  for (std::size_t i = 0; i < x.size(); ++i) {
    if (x[i] > 1) {
      throw InvalidArgument("binary value at index " + std::to_string(i) + " is " +
                            std::to_string(int{x[i]}));
    }
  }
}

void check_spins(const SpinAssignment& s) {
  for (std::size_t i = 0; i < s.size(); ++i) {
    if (s[i] != 1 && s[i] != -1) {
      throw InvalidArgument("spin value at index " + std::to_string(i) + " is " +
                            std::to_string(int{s[i]}));
    }
  }
}

BinaryAssignment spins_to_binary(const SpinAssignment& s) {
  check_spins(s);
  BinaryAssignment x(s.size());
  for (std::size_t i = 0; i < s.size(); ++i) x[i] = static_cast<std::uint8_t>((s[i] + 1) / 2);
  return x;
}

SpinAssignment binary_to_spins(const BinaryAssignment& x) {
  check_binary(x);
  SpinAssignment s(x.size());
  for (std::size_t i = 0; i < x.size(); ++i) s[i] = static_cast<std::int8_t>(2 * x[i] - 1);
  return s;
}

std::vector<BinaryAssignment> all_assignments(std::size_t n) {
  if (n > 24) throw ResourceLimit("refusing to enumerate 2^" + std::to_string(n) + " assignments");
  std::vector<BinaryAssignment> out;
  out.reserve(std::size_t{1} << n);
  for (std::uint64_t mask = 0; mask < (std::uint64_t{1} << n); ++mask) {
    BinaryAssignment x(n);
    for (std::size_t i = 0; i < n; ++i) x[i] = static_cast<std::uint8_t>((mask >> i) & 1U);
    out.push_back(std::move(x));
  }
  return out;
}

// --- QUBO matrix -----------------------------------------------------------

template <typename T>
void BasicQuboMatrix<T>::check_index(std::size_t i, std::size_t j) const {
  if (i >= n_ || j >= n_) {
    throw InvalidArgument("QUBO index (" + std::to_string(i) + ", " + std::to_string(j) +
                          ") out of range for n=" + std::to_string(n_));
  }
  if (i > j) {
    throw InvalidArgument("QUBO entries are upper-triangular; got (" + std::to_string(i) + ", " +
                          std::to_string(j) + ")");
  }
}

template <typename T>
T BasicQuboMatrix<T>::at(std::size_t i, std::size_t j) const {
  if (i >= n_ || j >= n_) check_index(i, j);
  return i <= j ? data_[i * n_ + j] : T{};
}

template <typename T>
void BasicQuboMatrix<T>::set(std::size_t i, std::size_t j, T value) {
  check_index(i, j);
  data_[i * n_ + j] = value;
  data_[j * n_ + i] = value;
}

template <typename T>
void BasicQuboMatrix<T>::add(std::size_t i, std::size_t j, T value) {
  check_index(i, j);
  data_[i * n_ + j] += value;
  if (i != j) data_[j * n_ + i] += value;
}

template class BasicQuboMatrix<std::int64_t>;
template class BasicQuboMatrix<double>;

QuboMatrix build_qubo(const NppInstance& instance) {
  const std::int64_t c = instance.total();
  if (c > kMaxQuboTotal) {
    throw ResourceLimit("instance total " + std::to_string(c) + " exceeds the QUBO limit " +
                        std::to_string(kMaxQuboTotal));
  }
  const auto& a = instance.values();
  const std::size_t n = a.size();
  QuboMatrix q(n, c * c);
  for (std::size_t i = 0; i < n; ++i) {
    q.set(i, i, 4 * a[i] * (a[i] - c));
    for (std::size_t j = i + 1; j < n; ++j) q.set(i, j, 8 * a[i] * a[j]);
  }
  return q;
}

template <typename T>
T qubo_energy(const BasicQuboMatrix<T>& q, const BinaryAssignment& x) {
  if (x.size() != q.size()) {
    throw InvalidArgument("assignment has " + std::to_string(x.size()) + " entries, QUBO has " +
                          std::to_string(q.size()));
  }
  check_binary(x);
  T energy = q.offset();
  for (std::size_t i = 0; i < x.size(); ++i) {
    if (!x[i]) continue;
    const auto row = q.row(i);
    T acc = row[i];
    for (std::size_t j = i + 1; j < x.size(); ++j) {
      if (x[j]) acc += row[j];
    }
    energy += acc;
  }
  return energy;
}

template std::int64_t qubo_energy(const QuboMatrix&, const BinaryAssignment&);
template double qubo_energy(const RealQuboMatrix&, const BinaryAssignment&);

// --- Ising model -----------------------------------------------------------

void IsingModel::set_h(std::size_t i, double value) {
  if (i >= h_.size()) throw InvalidArgument("spin index " + std::to_string(i) + " out of range");
  h_[i] = value;
}

void IsingModel::add_h(std::size_t i, double value) {
  if (i >= h_.size()) throw InvalidArgument("spin index " + std::to_string(i) + " out of range");
  h_[i] += value;
}

double IsingModel::coupler(std::size_t i, std::size_t j) const {
  const auto it = couplers_.find({std::min(i, j), std::max(i, j)});
  return it == couplers_.end() ? 0.0 : it->second;
}

void IsingModel::add_coupler(std::size_t i, std::size_t j, double value) {
  if (i == j) throw InvalidArgument("self-coupler on spin " + std::to_string(i));
  if (i >= h_.size() || j >= h_.size()) {
    throw InvalidArgument("coupler (" + std::to_string(i) + ", " + std::to_string(j) +
                          ") out of range for n=" + std::to_string(h_.size()));
  }
  couplers_[{std::min(i, j), std::max(i, j)}] += value;
}

double IsingModel::max_abs_coefficient() const noexcept {
  double m = 0.0;
  for (double v : h_) m = std::max(m, std::abs(v));
  for (const auto& [edge, v] : couplers_) m = std::max(m, std::abs(v));
  return m;
}

std::vector<IsingModel::Edge> IsingModel::edges() const {
  std::vector<Edge> out;
  out.reserve(couplers_.size());
  for (const auto& [edge, v] : couplers_) out.push_back(edge);
  return out;
}

IsingAdjacency::IsingAdjacency(const IsingModel& model)
    : neighbors(model.size()), weights(model.size()) {
  for (const auto& [edge, c] : model.couplers()) {
    if (c == 0.0) continue;
    neighbors[edge.first].push_back(edge.second);
    weights[edge.first].push_back(c);
    neighbors[edge.second].push_back(edge.first);
    weights[edge.second].push_back(c);
  }
}

double ising_energy(const IsingModel& model, const SpinAssignment& s) {
  if (s.size() != model.size()) {
    throw InvalidArgument("spin assignment has " + std::to_string(s.size()) + " entries, model has " +
                          std::to_string(model.size()));
  }
  check_spins(s);
  double energy = model.offset();
  for (std::size_t i = 0; i < s.size(); ++i) energy += model.h()[i] * s[i];
  for (const auto& [edge, c] : model.couplers()) energy += c * s[edge.first] * s[edge.second];
  return energy;
}

template <typename T>
IsingModel ising_from_qubo(const BasicQuboMatrix<T>& q) {
  const std::size_t n = q.size();
  IsingModel m(n, static_cast<double>(q.offset()));
  for (std::size_t i = 0; i < n; ++i) {
    const auto qii = static_cast<double>(q.coupling(i, i));
    m.add_h(i, qii / 2.0);
    m.add_offset(qii / 2.0);
    for (std::size_t j = i + 1; j < n; ++j) {
      const auto qij = static_cast<double>(q.coupling(i, j));
      if (qij == 0.0) continue;
      const double quarter = qij / 4.0;
      m.add_coupler(i, j, quarter);
      m.add_h(i, quarter);
      m.add_h(j, quarter);
      m.add_offset(quarter);
    }
  }
  return m;
}

template IsingModel ising_from_qubo(const QuboMatrix&);
template IsingModel ising_from_qubo(const RealQuboMatrix&);

RealQuboMatrix qubo_from_ising(const IsingModel& model) {
  RealQuboMatrix q(model.size(), model.offset());
  for (std::size_t i = 0; i < model.size(); ++i) {
    // h s = 2 h x - h
    q.add(i, i, 2.0 * model.h()[i]);
    q.set_offset(q.offset() - model.h()[i]);
  }
  for (const auto& [edge, c] : model.couplers()) {
    // c s_i s_j = 4 c x_i x_j - 2 c x_i - 2 c x_j + c
    q.add(edge.first, edge.second, 4.0 * c);
    q.add(edge.first, edge.first, -2.0 * c);
    q.add(edge.second, edge.second, -2.0 * c);
    q.set_offset(q.offset() + c);
  }
  return q;
}

}  // namespace subqubo
