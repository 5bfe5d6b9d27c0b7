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
#include <set>
#include <string>
#include <utility>
#include <vector>

#include "subqubo/assignment.hpp"
#include "subqubo/model.hpp"

namespace subqubo {

// C_m: an m x m grid of K_{4,4} unit cells. Qubit ids follow the usual
// linear order ((row * m + col) * 2 + side) * 4 + k, where side 0 is the
// vertical half of the cell (coupled to the same k one row down) and side 1
// the horizontal half (coupled to the same k one column right).
class ChimeraGraph {
 public:
  using Edge = std::pair<std::size_t, std::size_t>;

  explicit ChimeraGraph(std::size_t m);

  std::size_t m() const noexcept { return m_; }
  std::size_t num_nodes() const noexcept { return 8 * m_ * m_; }
  std::size_t num_edges() const noexcept { return edges_.size(); }

  // Sorted (u < v) edge list.
  const std::vector<Edge>& edges() const noexcept { return edges_; }
  const std::vector<std::size_t>& neighbors(std::size_t q) const { return adjacency_.at(q); }
  bool has_edge(std::size_t u, std::size_t v) const;

  std::size_t qubit(std::size_t row, std::size_t col, std::size_t side, std::size_t k) const noexcept {
    return ((row * m_ + col) * 2 + side) * 4 + k;
  }

 private:
  std::size_t m_;
  std::vector<Edge> edges_;
  std::vector<std::vector<std::size_t>> adjacency_;
};

ChimeraGraph chimera_graph(std::size_t m);

// chains[i] holds the physical qubits of logical variable i, sorted.
struct Embedding {
  std::vector<std::vector<std::size_t>> chains;

  bool operator==(const Embedding&) const = default;
};

struct Violation {
  enum class Kind { kEmptyChain, kQubitOutOfRange, kOverlap, kDisconnectedChain, kMissingCoupling, kWeakChain };
  Kind kind;
  std::string detail;
};

std::string to_string(Violation::Kind kind);

struct ValidationReport {
  bool chains_disjoint = true;
  bool chains_connected = true;
  bool edges_covered = true;
  std::vector<Violation> violations;
  // Non-fatal findings, e.g. a chain whose intra-chain couplers are absent.
  std::vector<Violation> warnings;

  bool ok() const noexcept { return violations.empty(); }
};

// Largest clique the triangle scheme fits into C_m.
std::size_t clique_capacity(const ChimeraGraph& target) noexcept;

// Triangle clique embedding of K_n. Chain (b, k) for b = i / 4, k = i % 4
// runs along row b through columns 0..b on the horizontal side and down
// column b through rows b..m-1 on the vertical side; the two halves meet in
// cell (b, b). Every chain has m + 1 qubits. Throws CapacityError past
// clique_capacity().
Embedding clique_embedding(std::size_t n_logical, const ChimeraGraph& target);

// Checks disjointness, chain connectivity and logical edge coverage and
// lists every violation found.
ValidationReport validate_embedding(const Embedding& e, const std::vector<IsingModel::Edge>& logical_edges,
                                    const ChimeraGraph& target);

// As above, plus a warning for every chain with an intra-chain edge that
// carries no ferromagnetic coupler in `physical`.
ValidationReport validate_embedding(const Embedding& e, const std::vector<IsingModel::Edge>& logical_edges,
                                    const ChimeraGraph& target, const IsingModel& physical);

// Default chain strength: 1.5 x the largest logical coefficient magnitude.
double default_chain_strength(const IsingModel& logical);

// Physical model over every qubit of `target`. Logical h_i is split evenly
// over chain i; logical c_ij sits on the lowest-id physical edge between the
// chains; each intra-chain edge gets -chain_strength. A chain-consistent
// physical state therefore has energy
//   logical energy - chain_strength * (number of intra-chain edges).
IsingModel embed_ising(const IsingModel& logical, const Embedding& e, double chain_strength,
                       const ChimeraGraph& target);

// Number of physical edges with both ends in the same chain.
std::size_t chain_edge_count(const Embedding& e, const ChimeraGraph& target);

// Majority vote per chain; an exact tie takes the spin of the chain's
// lowest-id qubit. `physical` is indexed by qubit id.
SpinAssignment unembed(const SpinAssignment& physical, const Embedding& e);

// Replicate each logical spin over its chain; qubits outside every chain
// are set to +1.
SpinAssignment embed_spins(const SpinAssignment& logical, const Embedding& e, std::size_t num_qubits);

// Fraction of chains whose qubits disagree.
double chain_break_fraction(const SpinAssignment& physical, const Embedding& e);

}  // namespace subqubo
