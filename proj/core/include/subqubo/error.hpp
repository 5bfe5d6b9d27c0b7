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

#include <stdexcept>
#include <string>

namespace subqubo {

// Bad input: wrong dimensions, out-of-range indices, malformed files or configs.
class InvalidArgument : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

// A computation would exceed a configured or representable limit
// (integer width, oracle table size).
class ResourceLimit : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// The requested embedding does not fit the target topology.
class CapacityError : public ResourceLimit {
 public:
  CapacityError(const std::string& what, std::size_t max_supported)
      : ResourceLimit(what), max_supported_(max_supported) {}

  std::size_t max_supported() const noexcept { return max_supported_; }

 private:
  std::size_t max_supported_;
};

}  // namespace subqubo
