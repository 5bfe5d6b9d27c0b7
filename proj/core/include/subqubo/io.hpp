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

#include <iosfwd>
#include <string>

#include "subqubo/annealer.hpp"
#include "subqubo/chimera.hpp"
#include "subqubo/instances.hpp"
#include "subqubo/model.hpp"

namespace subqubo {

// Whole-file helpers; failures throw InvalidArgument naming the path.
std::string read_text_file(const std::string& path);
void write_text_file(const std::string& path, const std::string& content);

// {"values": [int...], "seed": int, "size_class": int}
std::string instance_to_json(const NppInstance& instance);
NppInstance instance_from_json(const std::string& text);

// {"n": int, "entries": [[i, j, value]...], "offset": value}; zero entries
// are omitted on write and i <= j is enforced on read.
std::string qubo_to_json(const QuboMatrix& q);
QuboMatrix qubo_from_json(const std::string& text);

// [[time, s]...]
std::string schedule_to_json(const Schedule& schedule);
Schedule schedule_from_json(const std::string& text);

// {"chains": [[qubit ids]...]}
std::string embedding_to_json(const Embedding& e);
Embedding embedding_from_json(const std::string& text);

// "u,v" rows under a header line.
void write_chimera_edges_csv(std::ostream& out, const ChimeraGraph& graph);

// Shortest decimal text that round-trips the double.
std::string format_number(double value);

}  // namespace subqubo
