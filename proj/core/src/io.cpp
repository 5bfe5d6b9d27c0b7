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

#include "subqubo/io.hpp"

#include <charconv>
#include <fstream>
#include <ostream>
#include <sstream>

#include "json.hpp"
#include "subqubo/error.hpp"

namespace subqubo {

using nlohmann::json;

namespace {

json parse(const std::string& text, const char* what) {
  try {
    return json::parse(text);
  } catch (const json::exception& e) {
    throw InvalidArgument(std::string("malformed ") + what + " JSON: " + e.what());
  }
}

template <typename Fn>
auto guarded(const char* what, Fn&& fn) {
  try {
    return fn();
  } catch (const json::exception& e) {
    throw InvalidArgument(std::string("bad ") + what + ": " + e.what());
  }
}

}  // namespace

std::string read_text_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw InvalidArgument("cannot open '" + path + "'");
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

void write_text_file(const std::string& path, const std::string& content) {
  std::ofstream out(path, std::ios::binary | std::ios::trunc);
  if (!out) throw InvalidArgument("cannot write '" + path + "'");
  out << content;
  if (!out) throw InvalidArgument("write to '" + path + "' failed");
}

std::string instance_to_json(const NppInstance& instance) {
  json j = {{"values", instance.values()}, {"seed", instance.seed()}, {"size_class", instance.size_class()}};
  return j.dump() + "\n";
}

NppInstance instance_from_json(const std::string& text) {
  const json j = parse(text, "instance");
  return guarded("instance", [&] {
    if (!j.is_object() || !j.contains("values")) throw InvalidArgument("instance JSON needs a 'values' array");
    std::vector<std::int64_t> values;
    for (const auto& v : j.at("values")) {
      if (!v.is_number_integer()) throw InvalidArgument("instance values must be integers");
      values.push_back(v.get<std::int64_t>());
    }
    const std::uint64_t seed = j.value("seed", std::uint64_t{0});
    NppInstance inst(std::move(values), seed);
    if (j.contains("size_class") && j.at("size_class").get<std::size_t>() != inst.size()) {
      throw InvalidArgument("size_class " + j.at("size_class").dump() + " does not match " +
                            std::to_string(inst.size()) + " values");
    }
    return inst;
  });
}

std::string qubo_to_json(const QuboMatrix& q) {
  json entries = json::array();
  for (std::size_t i = 0; i < q.size(); ++i) {
    for (std::size_t j = i; j < q.size(); ++j) {
      if (q.at(i, j) != 0) entries.push_back({i, j, q.at(i, j)});
    }
  }
  json j = {{"n", q.size()}, {"entries", entries}, {"offset", q.offset()}};
  return j.dump() + "\n";
}

QuboMatrix qubo_from_json(const std::string& text) {
  const json j = parse(text, "QUBO");
  return guarded("QUBO", [&] {
    QuboMatrix q(j.at("n").get<std::size_t>(), j.value("offset", std::int64_t{0}));
    for (const auto& e : j.at("entries")) {
      if (!e.is_array() || e.size() != 3) throw InvalidArgument("QUBO entries are [i, j, value] triples");
      const auto i = e[0].get<std::size_t>();
      const auto k = e[1].get<std::size_t>();
      if (i > k) {
        throw InvalidArgument("QUBO entry (" + std::to_string(i) + ", " + std::to_string(k) +
                              ") lies below the diagonal");
      }
      if (!e[2].is_number_integer()) throw InvalidArgument("QUBO values must be integers");
      q.add(i, k, e[2].get<std::int64_t>());
    }
    return q;
  });
}

std::string schedule_to_json(const Schedule& schedule) {
  json j = json::array();
  for (const auto& v : schedule.vertices()) j.push_back({v.time, v.s});
  return j.dump() + "\n";
}

Schedule schedule_from_json(const std::string& text) {
  const json j = parse(text, "schedule");
  return guarded("schedule", [&] {
    if (!j.is_array()) throw InvalidArgument("schedule JSON must be a list of [time, s] pairs");
    std::vector<Schedule::Vertex> vertices;
    for (const auto& p : j) {
      if (!p.is_array() || p.size() != 2) throw InvalidArgument("schedule entries are [time, s] pairs");
      vertices.push_back({p[0].get<double>(), p[1].get<double>()});
    }
    return Schedule(std::move(vertices));
  });
}

std::string embedding_to_json(const Embedding& e) {
  json j = {{"chains", e.chains}};
  return j.dump() + "\n";
}

Embedding embedding_from_json(const std::string& text) {
  const json j = parse(text, "embedding");
  return guarded("embedding", [&] {
    Embedding e;
    e.chains = j.at("chains").get<std::vector<std::vector<std::size_t>>>();
    return e;
  });
}

void write_chimera_edges_csv(std::ostream& out, const ChimeraGraph& graph) {
  out << "u,v\n";
  for (const auto& [u, v] : graph.edges()) out << u << ',' << v << '\n';
}

std::string format_number(double value) {
  char buf[64];
  const auto res = std::to_chars(buf, buf + sizeof buf, value);
  return std::string(buf, res.ptr);
}

}  // namespace subqubo
