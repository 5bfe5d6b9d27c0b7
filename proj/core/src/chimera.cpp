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

#include "subqubo/chimera.hpp"

#include <algorithm>
#include <cmath>
#include <deque>
#include <limits>

#include "subqubo/error.hpp"

namespace subqubo {

ChimeraGraph::ChimeraGraph(std::size_t m) : m_(m) {
  if (m == 0) throw InvalidArgument("Chimera grid dimension must be >= 1");
  for (std::size_t r = 0; r < m; ++r) {
    for (std::size_t c = 0; c < m; ++c) {
      for (std::size_t a = 0; a < 4; ++a) {
        for (std::size_t b = 0; b < 4; ++b) edges_.emplace_back(qubit(r, c, 0, a), qubit(r, c, 1, b));
      }
      for (std::size_t k = 0; k < 4; ++k) {
        if (r + 1 < m) edges_.emplace_back(qubit(r, c, 0, k), qubit(r + 1, c, 0, k));
        if (c + 1 < m) edges_.emplace_back(qubit(r, c, 1, k), qubit(r, c + 1, 1, k));
      }
    }
  }
  std::sort(edges_.begin(), edges_.end());
  adjacency_.resize(num_nodes());
  for (const auto& [u, v] : edges_) {
    adjacency_[u].push_back(v);
    adjacency_[v].push_back(u);
  }
  for (auto& nb : adjacency_) std::sort(nb.begin(), nb.end());
}

bool ChimeraGraph::has_edge(std::size_t u, std::size_t v) const {
  if (u >= num_nodes() || v >= num_nodes()) return false;
  const auto& nb = adjacency_[u];
  return std::binary_search(nb.begin(), nb.end(), v);
}

ChimeraGraph chimera_graph(std::size_t m) { return ChimeraGraph(m); }

std::string to_string(Violation::Kind kind) {
  switch (kind) {
    case Violation::Kind::kEmptyChain: return "empty_chain";
    case Violation::Kind::kQubitOutOfRange: return "qubit_out_of_range";
    case Violation::Kind::kOverlap: return "overlap";
    case Violation::Kind::kDisconnectedChain: return "disconnected_chain";
    case Violation::Kind::kMissingCoupling: return "missing_coupling";
    case Violation::Kind::kWeakChain: return "weak_chain";
  }
  return "unknown";
}

std::size_t clique_capacity(const ChimeraGraph& target) noexcept { return 4 * target.m(); }

Embedding clique_embedding(std::size_t n_logical, const ChimeraGraph& target) {
  const std::size_t capacity = clique_capacity(target);
  if (n_logical == 0) throw InvalidArgument("clique embedding needs at least one variable");
  if (n_logical > capacity) {
    throw CapacityError("K_" + std::to_string(n_logical) + " does not fit C_" + std::to_string(target.m()) +
                            "; the triangle scheme supports at most " + std::to_string(capacity),
                        capacity);
  }
  const std::size_t m = target.m();
  Embedding e;
  e.chains.resize(n_logical);
  for (std::size_t i = 0; i < n_logical; ++i) {
    const std::size_t b = i / 4;
    const std::size_t k = i % 4;
    auto& chain = e.chains[i];
    for (std::size_t c = 0; c <= b; ++c) chain.push_back(target.qubit(b, c, 1, k));
    for (std::size_t r = b; r < m; ++r) chain.push_back(target.qubit(r, b, 0, k));
    std::sort(chain.begin(), chain.end());
  }
  return e;
}

namespace {

bool chain_connected(const std::vector<std::size_t>& chain, const ChimeraGraph& target) {
  if (chain.size() <= 1) return true;
  std::vector<std::size_t> sorted = chain;
  std::sort(sorted.begin(), sorted.end());
  std::vector<bool> seen(sorted.size(), false);
  std::deque<std::size_t> frontier{0};
  seen[0] = true;
  std::size_t reached = 1;
  while (!frontier.empty()) {
    const std::size_t at = frontier.front();
    frontier.pop_front();
    for (std::size_t nb : target.neighbors(sorted[at])) {
      const auto it = std::lower_bound(sorted.begin(), sorted.end(), nb);
      if (it == sorted.end() || *it != nb) continue;
      const auto idx = static_cast<std::size_t>(it - sorted.begin());
      if (seen[idx]) continue;
      seen[idx] = true;
      ++reached;
      frontier.push_back(idx);
    }
  }
  return reached == sorted.size();
}

// Lowest (u, v) physical edge joining two chains, if any.
bool lowest_link(const std::vector<std::size_t>& a, const std::vector<std::size_t>& b, const ChimeraGraph& target,
                 IsingModel::Edge* out) {
  bool found = false;
  IsingModel::Edge best{std::numeric_limits<std::size_t>::max(), std::numeric_limits<std::size_t>::max()};
  for (std::size_t p : a) {
    for (std::size_t q : b) {
      if (!target.has_edge(p, q)) continue;
      const IsingModel::Edge cand{std::min(p, q), std::max(p, q)};
      if (cand < best) {
        best = cand;
        found = true;
      }
    }
  }
  if (found && out) *out = best;
  return found;
}

}  // namespace

ValidationReport validate_embedding(const Embedding& e, const std::vector<IsingModel::Edge>& logical_edges,
                                    const ChimeraGraph& target) {
  ValidationReport report;
  std::vector<std::size_t> owner(target.num_nodes(), std::numeric_limits<std::size_t>::max());

  for (std::size_t i = 0; i < e.chains.size(); ++i) {
    const auto& chain = e.chains[i];
    if (chain.empty()) {
      report.chains_connected = false;
      report.violations.push_back({Violation::Kind::kEmptyChain, "chain " + std::to_string(i) + " is empty"});
      continue;
    }
    bool in_range = true;
    for (std::size_t q : chain) {
      if (q >= target.num_nodes()) {
        in_range = false;
        report.violations.push_back({Violation::Kind::kQubitOutOfRange,
                                     "chain " + std::to_string(i) + " uses qubit " + std::to_string(q) +
                                         " outside C_" + std::to_string(target.m())});
        continue;
      }
      if (owner[q] != std::numeric_limits<std::size_t>::max()) {
        report.chains_disjoint = false;
        report.violations.push_back({Violation::Kind::kOverlap, "qubit " + std::to_string(q) + " is in chains " +
                                                                    std::to_string(owner[q]) + " and " +
                                                                    std::to_string(i)});
      } else {
        owner[q] = i;
      }
    }
    if (in_range && !chain_connected(chain, target)) {
      report.chains_connected = false;
      report.violations.push_back(
          {Violation::Kind::kDisconnectedChain, "chain " + std::to_string(i) + " is not connected"});
    }
  }

  for (const auto& [i, j] : logical_edges) {
    if (i >= e.chains.size() || j >= e.chains.size()) {
      report.edges_covered = false;
      report.violations.push_back({Violation::Kind::kMissingCoupling, "logical edge (" + std::to_string(i) + ", " +
                                                                          std::to_string(j) + ") has no chain"});
      continue;
    }
    if (!lowest_link(e.chains[i], e.chains[j], target, nullptr)) {
      report.edges_covered = false;
      report.violations.push_back({Violation::Kind::kMissingCoupling, "no physical edge joins chains " +
                                                                          std::to_string(i) + " and " +
                                                                          std::to_string(j)});
    }
  }
  return report;
}

ValidationReport validate_embedding(const Embedding& e, const std::vector<IsingModel::Edge>& logical_edges,
                                    const ChimeraGraph& target, const IsingModel& physical) {
  ValidationReport report = validate_embedding(e, logical_edges, target);
  for (std::size_t i = 0; i < e.chains.size(); ++i) {
    const auto& chain = e.chains[i];
    for (std::size_t a = 0; a < chain.size(); ++a) {
      bool weak = false;
      for (std::size_t b = a + 1; b < chain.size(); ++b) {
        if (target.has_edge(chain[a], chain[b]) && chain[a] < physical.size() && chain[b] < physical.size() &&
            !(physical.coupler(chain[a], chain[b]) < 0.0)) {
          weak = true;
          break;
        }
      }
      if (weak) {
        report.warnings.push_back({Violation::Kind::kWeakChain,
                                   "chain " + std::to_string(i) + " has intra-chain edges without a "
                                                                   "ferromagnetic coupler"});
        break;
      }
    }
  }
  return report;
}

double default_chain_strength(const IsingModel& logical) { return 1.5 * logical.max_abs_coefficient(); }

std::size_t chain_edge_count(const Embedding& e, const ChimeraGraph& target) {
  std::size_t count = 0;
  for (const auto& chain : e.chains) {
    for (std::size_t a = 0; a < chain.size(); ++a) {
      for (std::size_t b = a + 1; b < chain.size(); ++b) {
        if (target.has_edge(chain[a], chain[b])) ++count;
      }
    }
  }
  return count;
}

IsingModel embed_ising(const IsingModel& logical, const Embedding& e, double chain_strength,
                       const ChimeraGraph& target) {
  if (e.chains.size() != logical.size()) {
    throw InvalidArgument("embedding has " + std::to_string(e.chains.size()) + " chains for " +
                          std::to_string(logical.size()) + " logical variables");
  }
  if (!(chain_strength >= 0.0) || !std::isfinite(chain_strength)) {
    throw InvalidArgument("chain strength must be a finite nonnegative number");
  }
  const auto logical_edges = logical.edges();
  const ValidationReport report = validate_embedding(e, logical_edges, target);
  if (!report.ok()) throw InvalidArgument("invalid embedding: " + report.violations.front().detail);

  IsingModel physical(target.num_nodes(), logical.offset());
  for (std::size_t i = 0; i < e.chains.size(); ++i) {
    const double share = logical.h()[i] / static_cast<double>(e.chains[i].size());
    if (share != 0.0) {
      for (std::size_t q : e.chains[i]) physical.add_h(q, share);
    }
  }
  for (const auto& [edge, c] : logical.couplers()) {
    if (c == 0.0) continue;
    IsingModel::Edge link;
    lowest_link(e.chains[edge.first], e.chains[edge.second], target, &link);
    physical.add_coupler(link.first, link.second, c);
  }
  if (chain_strength > 0.0) {
    for (const auto& chain : e.chains) {
      for (std::size_t a = 0; a < chain.size(); ++a) {
        for (std::size_t b = a + 1; b < chain.size(); ++b) {
          if (target.has_edge(chain[a], chain[b])) physical.add_coupler(chain[a], chain[b], -chain_strength);
        }
      }
    }
  }
  return physical;
}

SpinAssignment unembed(const SpinAssignment& physical, const Embedding& e) {
  SpinAssignment logical(e.chains.size());
  for (std::size_t i = 0; i < e.chains.size(); ++i) {
    const auto& chain = e.chains[i];
    if (chain.empty()) throw InvalidArgument("chain " + std::to_string(i) + " is empty");
    int vote = 0;
    std::size_t lowest = std::numeric_limits<std::size_t>::max();
    for (std::size_t q : chain) {
      if (q >= physical.size()) {
        throw InvalidArgument("physical sample has no value for qubit " + std::to_string(q));
      }
      const std::int8_t s = physical[q];
      if (s != 1 && s != -1) throw InvalidArgument("physical spin at qubit " + std::to_string(q) + " is not +-1");
      vote += s;
      lowest = std::min(lowest, q);
    }
    logical[i] = vote > 0 ? 1 : vote < 0 ? -1 : physical[lowest];
  }
  return logical;
}

SpinAssignment embed_spins(const SpinAssignment& logical, const Embedding& e, std::size_t num_qubits) {
  if (logical.size() != e.chains.size()) throw InvalidArgument("logical state does not match the embedding");
  check_spins(logical);
  SpinAssignment physical(num_qubits, 1);
  for (std::size_t i = 0; i < e.chains.size(); ++i) {
    for (std::size_t q : e.chains[i]) {
      if (q >= num_qubits) throw InvalidArgument("chain qubit " + std::to_string(q) + " out of range");
      physical[q] = logical[i];
    }
  }
  return physical;
}

double chain_break_fraction(const SpinAssignment& physical, const Embedding& e) {
  if (e.chains.empty()) return 0.0;
  std::size_t broken = 0;
  for (const auto& chain : e.chains) {
    for (std::size_t q : chain) {
      if (q >= physical.size()) throw InvalidArgument("physical sample has no value for qubit " + std::to_string(q));
      if (physical[q] != physical[chain.front()]) {
        ++broken;
        break;
      }
    }
  }
  return static_cast<double>(broken) / static_cast<double>(e.chains.size());
}

}  // namespace subqubo
