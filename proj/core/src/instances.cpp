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

#include <algorithm>
#include <bit>
#include <set>

#include "subqubo/error.hpp"
#include "subqubo/rng.hpp"

namespace subqubo {

NppInstance::NppInstance(std::vector<std::int64_t> values, std::uint64_t seed)
    : values_(std::move(values)), seed_(seed) {
  for (std::size_t i = 0; i < values_.size(); ++i) {
    const std::int64_t a = values_[i];
    if (a < 1) {
      throw InvalidArgument("instance value at index " + std::to_string(i) + " is " +
                            std::to_string(a) + "; values must be >= 1");
    }
    if (a > kMaxInstanceTotal - total_) {
      throw InvalidArgument("instance total exceeds " + std::to_string(kMaxInstanceTotal));
    }
    total_ += a;
  }
}

namespace {

// Uniform composition of `total` into `parts` positive integers: pick
// parts-1 distinct cut points in [1, total-1] with Floyd's sampler.
std::vector<std::int64_t> random_composition(std::int64_t total, std::int64_t parts, Rng& rng) {
  std::set<std::int64_t> cuts;
  const std::int64_t universe = total - 1;
  for (std::int64_t j = universe - (parts - 1) + 1; j <= universe; ++j) {
    const std::int64_t t = rng.between(1, j);
    if (!cuts.insert(t).second) cuts.insert(j);
  }
  std::vector<std::int64_t> out;
  out.reserve(static_cast<std::size_t>(parts));
  std::int64_t prev = 0;
  for (std::int64_t c : cuts) {
    out.push_back(c - prev);
    prev = c;
  }
  out.push_back(total - prev);
  return out;
}

}  // namespace

NppInstance generate_perfect(std::size_t n, std::int64_t max_value, std::uint64_t seed) {
  if (n < 2) throw InvalidArgument("generate_perfect needs n >= 2, got " + std::to_string(n));
  if (max_value < 1) throw InvalidArgument("generate_perfect needs max_value >= 1");

  const auto first = static_cast<std::int64_t>((n + 1) / 2);
  const auto second = static_cast<std::int64_t>(n / 2);
  if (max_value > kMaxInstanceTotal / 2 / first) {
    throw InvalidArgument("max_value too large for n; the instance total could overflow");
  }

  Rng rng(seed);
  std::vector<std::int64_t> values;
  values.reserve(n);
  std::int64_t half = 0;
  // half >= first >= second, so the composition below always exists; the
  // loop only guards the invariant.
  do {
    values.clear();
    half = 0;
    for (std::int64_t i = 0; i < first; ++i) {
      values.push_back(rng.between(1, max_value));
      half += values.back();
    }
  } while (half < second);

  for (std::int64_t v : random_composition(half, second, rng)) values.push_back(v);

  for (std::size_t i = values.size() - 1; i > 0; --i) {
    std::swap(values[i], values[rng.below(i + 1)]);
  }
  return NppInstance(std::move(values), seed);
}

std::int64_t delta(const NppInstance& instance, const Partition& p) {
  if (p.size() != instance.size()) {
    throw InvalidArgument("partition has " + std::to_string(p.size()) + " entries, instance has " +
                          std::to_string(instance.size()));
  }
  check_binary(p);
  std::int64_t in_a = 0;
  for (std::size_t i = 0; i < p.size(); ++i) {
    if (p[i]) in_a += instance.values()[i];
  }
  const std::int64_t d = 2 * in_a - instance.total();
  return d < 0 ? -d : d;
}

std::int64_t optimal_delta(const NppInstance& instance, std::int64_t cap) {
  const std::int64_t total = instance.total();
  if (total > cap) {
    throw ResourceLimit("oracle table size " + std::to_string(total) + " exceeds cap " +
                        std::to_string(cap));
  }
  const auto half = static_cast<std::size_t>(total / 2);
  const std::size_t words = half / 64 + 1;
  std::vector<std::uint64_t> reach(words, 0);
  reach[0] = 1;
  const std::size_t tail_bits = (half + 1) % 64;
  const std::uint64_t tail_mask = tail_bits == 0 ? ~0ULL : (1ULL << tail_bits) - 1;

  for (std::int64_t a : instance.values()) {
    const auto shift = static_cast<std::size_t>(a);
    if (shift > half) continue;
    const std::size_t word_shift = shift / 64;
    const std::size_t bit_shift = shift % 64;
    // reach |= reach << shift, walking from the top so sources are unmodified
    for (std::size_t w = words; w-- > word_shift;) {
      const std::size_t src = w - word_shift;
      std::uint64_t moved = reach[src] << bit_shift;
      if (bit_shift != 0 && src > 0) moved |= reach[src - 1] >> (64 - bit_shift);
      reach[w] |= moved;
    }
    reach[words - 1] &= tail_mask;
  }

  for (std::size_t w = words; w-- > 0;) {
    if (reach[w] != 0) {
      const auto best = static_cast<std::int64_t>(w * 64 + (63 - std::countl_zero(reach[w])));
      return total - 2 * best;
    }
  }
  return total;  // unreachable: sum 0 is always reachable
}

std::vector<HistogramBin> histogram(const NppInstance& instance, std::size_t bins) {
  if (bins < 1) throw InvalidArgument("histogram needs at least one bin");
  std::vector<HistogramBin> out(bins);
  if (instance.size() == 0) return out;

  const auto [lo_it, hi_it] = std::minmax_element(instance.values().begin(), instance.values().end());
  const auto lo = static_cast<double>(*lo_it);
  const auto hi = static_cast<double>(*hi_it);
  const double width = (hi - lo) / static_cast<double>(bins);
  for (std::size_t b = 0; b < bins; ++b) out[b].lower_edge = lo + width * static_cast<double>(b);

  for (std::int64_t v : instance.values()) {
    std::size_t b = 0;
    if (width > 0.0) {
      b = static_cast<std::size_t>((static_cast<double>(v) - lo) / width);
      b = std::min(b, bins - 1);
    }
    ++out[b].count;
  }
  return out;
}

}  // namespace subqubo
