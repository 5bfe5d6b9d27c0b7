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

#include <cstdint>
#include <vector>

namespace subqubo {

// x_i in {0,1}.
using BinaryAssignment = std::vector<std::uint8_t>;
// S_i in {-1,+1}.
using SpinAssignment = std::vector<std::int8_t>;

// Throw InvalidArgument when an entry falls outside the alphabet.
void check_binary(const BinaryAssignment& x);
void check_spins(const SpinAssignment& s);

// q = (S + 1) / 2 elementwise, and its inverse S = 2q - 1.
BinaryAssignment spins_to_binary(const SpinAssignment& s);
SpinAssignment binary_to_spins(const BinaryAssignment& x);

// Every assignment over n variables, in binary counting order. Only for
// exhaustive checks; n must be small.
std::vector<BinaryAssignment> all_assignments(std::size_t n);

}  // namespace subqubo
