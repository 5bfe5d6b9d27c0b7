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

// Command-line front end for the experiments. Every subcommand reads an
// optional JSON config, applies flag overrides, and writes one CSV table.
// Exit codes: 0 success, 2 invalid config or arguments, 3 resource limits.

#include <algorithm>
#include <cstdint>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <map>
#include <memory>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "subqubo/chimera.hpp"
#include "subqubo/error.hpp"
#include "subqubo/harness.hpp"
#include "subqubo/hybrid.hpp"
#include "subqubo/instances.hpp"
#include "subqubo/io.hpp"
#include "subqubo/model.hpp"
#include "subqubo/rng.hpp"

namespace {

using namespace subqubo;

constexpr int kExitOk = 0;
constexpr int kExitInvalid = 2;
constexpr int kExitResource = 3;

struct Common {
  std::string config_path;
  std::string output_path;
};

ExperimentConfig load_config(const Common& common) {
  if (common.config_path.empty()) return ExperimentConfig{};
  return config_from_json(read_text_file(common.config_path));
}

// Runs `body` with the CSV destination: --output, then the config's
// output_path, then stdout.
template <typename Body>
void with_output(const std::string& path, Body&& body) {
  if (path.empty() || path == "-") {
    body(std::cout);
    return;
  }
  std::ofstream out(path, std::ios::binary);
  if (!out) throw InvalidArgument("cannot open '" + path + "' for writing");
  body(out);
  if (!out) throw InvalidArgument("failed writing '" + path + "'");
}

std::string output_target(const Common& common, const ExperimentConfig& config) {
  return common.output_path.empty() ? config.output_path : common.output_path;
}

std::string join_values(const std::vector<std::int64_t>& values) {
  std::string s;
  for (std::size_t i = 0; i < values.size(); ++i) {
    if (i) s += ' ';
    s += std::to_string(values[i]);
  }
  return s;
}

std::string bit_string(const BinaryAssignment& x) {
  std::string s;
  s.reserve(x.size());
  for (auto v : x) s += v ? '1' : '0';
  return s;
}

// ---- generate --------------------------------------------------------------

struct GenerateOptions {
  std::vector<std::size_t> sizes;
  std::optional<std::size_t> count;
  std::optional<std::int64_t> max_value;
  std::optional<std::uint64_t> seed;
  std::string out_dir;
  std::string histogram_path;
  std::size_t bins = 10;
};

int run_generate(const Common& common, const GenerateOptions& opt) {
  ExperimentConfig config = load_config(common);
  if (!opt.sizes.empty()) config.sizes = opt.sizes;
  if (opt.count) config.datasets_per_size = *opt.count;
  if (opt.max_value) config.max_value = *opt.max_value;
  if (opt.seed) config.master_seed = *opt.seed;
  config.validate();
  if (!opt.out_dir.empty()) std::filesystem::create_directories(opt.out_dir);

  std::vector<HistogramBin> pooled;
  std::vector<std::int64_t> all_values;
  std::ostringstream table;
  table << "size,dataset,seed,total,optimal_delta,file,values\n";
  for (std::size_t size : config.sizes) {
    for (std::size_t d = 0; d < config.datasets_per_size; ++d) {
      const std::uint64_t seed = derive_seed(config.master_seed, {size, d});
      const NppInstance inst = generate_perfect(size, config.max_value, seed);
      std::string file;
      if (!opt.out_dir.empty()) {
        file = "instance_" + std::to_string(size) + "_" + std::to_string(d) + ".json";
        write_text_file((std::filesystem::path(opt.out_dir) / file).string(), instance_to_json(inst) + "\n");
      }
      const std::int64_t opt_delta = config.compute_optimal ? optimal_delta(inst) : -1;
      table << size << ',' << d << ',' << seed << ',' << inst.total() << ',' << opt_delta << ',' << file << ",\""
            << join_values(inst.values()) << "\"\n";
      all_values.insert(all_values.end(), inst.values().begin(), inst.values().end());
    }
  }
  if (!opt.histogram_path.empty()) {
    std::ofstream out(opt.histogram_path, std::ios::binary);
    if (!out) throw InvalidArgument("cannot open '" + opt.histogram_path + "' for writing");
    write_histogram_csv(out, histogram(NppInstance(all_values), opt.bins));
  }
  with_output(output_target(common, config), [&](std::ostream& out) { out << table.str(); });
  return kExitOk;
}

// ---- solve -----------------------------------------------------------------

struct SolveOptions {
  std::string instance_path;
  std::optional<std::size_t> size;
  std::optional<std::uint64_t> instance_seed;
  std::optional<std::string> backend;
  std::optional<std::size_t> subproblem_size;
  std::optional<std::size_t> max_rounds;
  std::optional<std::size_t> chimera_m;
  std::string schedule_path;
  std::optional<std::uint64_t> seed;
  std::string trace_path;
};

int run_solve(const Common& common, const SolveOptions& opt) {
  ExperimentConfig config = load_config(common);
  HybridParams& p = config.solver;
  if (opt.backend) p.backend = parse_backend(*opt.backend);
  if (opt.subproblem_size) p.subproblem_size = *opt.subproblem_size;
  if (opt.max_rounds) {
    p.max_rounds = *opt.max_rounds;
    p.stall_rounds = std::min(p.stall_rounds, p.max_rounds);
  }
  if (opt.chimera_m) p.chimera_m = *opt.chimera_m;
  if (opt.seed) p.seed = *opt.seed;
  if (!opt.schedule_path.empty()) {
    if (p.backend == Backend::kTabu) throw InvalidArgument("--schedule-file needs a sampler backend");
    p.schedule = schedule_from_json(read_text_file(opt.schedule_path));
  }
  if (opt.size) config.pause.instance_size = *opt.size;
  if (opt.instance_seed) config.pause.instance_seed = *opt.instance_seed;
  config.validate();

  const NppInstance inst = !opt.instance_path.empty()
                               ? instance_from_json(read_text_file(opt.instance_path))
                               : generate_perfect(config.pause.instance_size, config.max_value,
                                                  config.pause.instance_seed);
  const HybridResult r = decompose_solve(build_qubo(inst), p);
  if (!opt.trace_path.empty()) {
    std::ofstream trace(opt.trace_path, std::ios::binary);
    if (!trace) throw InvalidArgument("cannot open '" + opt.trace_path + "' for writing");
    write_round_trace(trace, r.rounds);
  }
  const std::int64_t opt_delta = config.compute_optimal ? optimal_delta(inst) : -1;

  with_output(output_target(common, config), [&](std::ostream& out) {
    out << "size,total,backend,seed,subproblem_size,rounds,delta,energy,optimal_delta,broken_chain_fraction,"
           "assignment,wall_time\n";
    out << inst.size() << ',' << inst.total() << ',' << to_string(p.backend) << ',' << p.seed << ','
        << p.subproblem_size << ',' << r.rounds.size() << ',' << delta(inst, r.result.assignment) << ','
        << r.result.energy << ',' << opt_delta << ',' << format_number(r.broken_chain_fraction) << ','
        << bit_string(r.result.assignment) << ',' << format_number(r.result.wall_time) << '\n';
  });
  return kExitOk;
}

// ---- size-sweep ------------------------------------------------------------

struct SweepOptions {
  std::vector<std::size_t> sizes;
  std::optional<std::size_t> datasets;
  std::optional<std::uint64_t> seed;
  std::optional<std::size_t> threads;
  std::optional<std::string> backend;
  std::string summary_path;
};

void write_side_table(const std::string& path, const auto& writer) {
  if (path.empty()) return;
  std::ofstream out(path, std::ios::binary);
  if (!out) throw InvalidArgument("cannot open '" + path + "' for writing");
  writer(out);
}

int run_size_sweep_cmd(const Common& common, const SweepOptions& opt) {
  ExperimentConfig config = load_config(common);
  if (!opt.sizes.empty()) config.sizes = opt.sizes;
  if (opt.datasets) config.datasets_per_size = *opt.datasets;
  if (opt.seed) config.master_seed = *opt.seed;
  if (opt.threads) config.threads = *opt.threads;
  if (opt.backend) config.solver.backend = parse_backend(*opt.backend);
  config.validate();

  const auto rows = run_size_sweep(config);
  write_side_table(opt.summary_path,
                   [&](std::ostream& out) { write_size_summary_csv(out, rows, config.saturation); });
  with_output(output_target(common, config), [&](std::ostream& out) { write_size_sweep_csv(out, rows); });
  return kExitOk;
}

// ---- pause-sweep -----------------------------------------------------------

struct PauseOptions {
  std::string instance_path;
  std::vector<double> durations;
  std::optional<std::size_t> repetitions;
  std::optional<std::uint64_t> seed;
  std::optional<std::string> backend;
  std::optional<std::size_t> size;
  std::optional<std::uint64_t> instance_seed;
  std::string summary_path;
};

int run_pause_sweep_cmd(const Common& common, const PauseOptions& opt) {
  ExperimentConfig config = load_config(common);
  if (!opt.durations.empty()) config.pause_durations = opt.durations;
  if (opt.repetitions) config.repetitions = *opt.repetitions;
  if (opt.seed) config.master_seed = *opt.seed;
  if (opt.backend) config.pause.backend = parse_backend(*opt.backend);
  if (opt.size) config.pause.instance_size = *opt.size;
  if (opt.instance_seed) config.pause.instance_seed = *opt.instance_seed;
  config.validate();

  const NppInstance inst = !opt.instance_path.empty()
                               ? instance_from_json(read_text_file(opt.instance_path))
                               : generate_perfect(config.pause.instance_size, config.max_value,
                                                  config.pause.instance_seed);
  const auto rows = run_pause_sweep(config, inst);
  write_side_table(opt.summary_path,
                   [&](std::ostream& out) { write_pause_summary_csv(out, rows, config.saturation); });
  with_output(output_target(common, config), [&](std::ostream& out) { write_pause_sweep_csv(out, rows); });
  return kExitOk;
}

// ---- fit -------------------------------------------------------------------

struct FitOptions {
  std::string input_path;
  std::string x_column = "size";
  std::string t_column = "wall_time";
  std::string aggregate = "median";
  std::string residuals_path;
};

std::vector<std::string> split_csv_line(const std::string& line) {
  std::vector<std::string> fields;
  std::string field;
  bool quoted = false;
  for (char c : line) {
    if (c == '"') {
      quoted = !quoted;
    } else if (c == ',' && !quoted) {
      fields.push_back(field);
      field.clear();
    } else if (c != '\r') {
      field += c;
    }
  }
  fields.push_back(field);
  return fields;
}

double parse_number(const std::string& text, const std::string& what) {
  std::size_t used = 0;
  double v = 0.0;
  try {
    v = std::stod(text, &used);
  } catch (const std::exception&) {
    used = 0;
  }
  if (used == 0 || used != text.size()) throw InvalidArgument("fit: cannot parse " + what + " '" + text + "'");
  return v;
}

// Reads (x, t) pairs from a CSV with a header. Rows whose status column is
// present and not "ok" are skipped.
std::vector<std::pair<double, double>> read_points(const FitOptions& opt) {
  std::istringstream in(read_text_file(opt.input_path));
  std::string line;
  if (!std::getline(in, line)) throw InvalidArgument("fit: '" + opt.input_path + "' is empty");
  const auto header = split_csv_line(line);
  const auto column = [&](const std::string& name) -> std::optional<std::size_t> {
    const auto it = std::find(header.begin(), header.end(), name);
    if (it == header.end()) return std::nullopt;
    return static_cast<std::size_t>(it - header.begin());
  };
  const auto xc = column(opt.x_column);
  const auto tc = column(opt.t_column);
  if (!xc || !tc) throw InvalidArgument("fit: input lacks column '" + (xc ? opt.t_column : opt.x_column) + "'");
  const auto sc = column("status");

  std::map<double, std::vector<double>> by_x;
  std::vector<std::pair<double, double>> raw;
  while (std::getline(in, line)) {
    if (line.empty()) continue;
    const auto f = split_csv_line(line);
    if (f.size() != header.size()) throw InvalidArgument("fit: ragged row '" + line + "'");
    if (sc && f[*sc] != "ok") continue;
    const double x = parse_number(f[*xc], opt.x_column);
    const double t = parse_number(f[*tc], opt.t_column);
    raw.emplace_back(x, t);
    by_x[x].push_back(t);
  }
  if (opt.aggregate == "none") return raw;
  if (opt.aggregate != "median") throw InvalidArgument("fit: --aggregate must be median or none");
  std::vector<std::pair<double, double>> points;
  for (const auto& [x, ts] : by_x) points.emplace_back(x, quantile(ts, 0.5));
  return points;
}

int run_fit(const Common& common, const FitOptions& opt) {
  const ExperimentConfig config = load_config(common);
  const auto points = read_points(opt);
  const FitResult fit = fit_exponential(points);
  write_side_table(opt.residuals_path, [&](std::ostream& out) { write_fit_residuals_csv(out, fit, points); });
  with_output(output_target(common, config), [&](std::ostream& out) { write_fit_csv(out, fit); });
  return kExitOk;
}

// ---- embed -----------------------------------------------------------------

struct EmbedOptions {
  std::optional<std::size_t> n;
  std::size_t m = 0;
  std::string validate_path;
  std::string json_path;
  std::string edges_path;
};

int run_embed(const Common& common, const EmbedOptions& opt) {
  const ExperimentConfig config = load_config(common);
  const std::string target_path = output_target(common, config);

  if (!opt.validate_path.empty()) {
    if (opt.m == 0) throw InvalidArgument("embed: --validate needs --m");
    const ChimeraGraph graph(opt.m);
    const Embedding e = embedding_from_json(read_text_file(opt.validate_path));
    // The embeddings this tool produces target complete logical graphs.
    std::vector<IsingModel::Edge> clique;
    for (std::size_t i = 0; i < e.chains.size(); ++i) {
      for (std::size_t j = i + 1; j < e.chains.size(); ++j) clique.emplace_back(i, j);
    }
    const ValidationReport report = validate_embedding(e, clique, graph);
    with_output(target_path, [&](std::ostream& out) {
      out << "check,result,detail\n";
      out << "chains_disjoint," << (report.chains_disjoint ? "pass" : "fail") << ",\n";
      out << "chains_connected," << (report.chains_connected ? "pass" : "fail") << ",\n";
      out << "edges_covered," << (report.edges_covered ? "pass" : "fail") << ",\n";
      for (const auto& v : report.violations) out << to_string(v.kind) << ",violation,\"" << v.detail << "\"\n";
    });
    return report.ok() ? kExitOk : kExitInvalid;
  }

  if (!opt.n) throw InvalidArgument("embed: give --n to build an embedding or --validate to check one");
  const std::size_t m = opt.m != 0 ? opt.m : std::max<std::size_t>(1, (*opt.n + 3) / 4);
  const ChimeraGraph graph(m);
  const Embedding e = clique_embedding(*opt.n, graph);
  if (!opt.json_path.empty()) write_text_file(opt.json_path, embedding_to_json(e) + "\n");
  write_side_table(opt.edges_path, [&](std::ostream& out) { write_chimera_edges_csv(out, graph); });
  with_output(target_path, [&](std::ostream& out) {
    out << "logical,chain_length,qubits\n";
    for (std::size_t i = 0; i < e.chains.size(); ++i) {
      out << i << ',' << e.chains[i].size() << ",\"";
      for (std::size_t k = 0; k < e.chains[i].size(); ++k) out << (k ? " " : "") << e.chains[i][k];
      out << "\"\n";
    }
  });
  return kExitOk;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Number partitioning through QUBO decomposition and annealing"};
  app.require_subcommand(1);
  Common common;
  const auto add_common = [&](CLI::App* sub) {
    sub->add_option("--config", common.config_path, "JSON experiment config");
    sub->add_option("--output,-o", common.output_path, "CSV destination (default: config output_path or stdout)");
  };

  GenerateOptions gen;
  auto* generate = app.add_subcommand("generate", "Generate perfect instances");
  add_common(generate);
  generate->add_option("--sizes", gen.sizes, "Instance sizes");
  generate->add_option("--count", gen.count, "Instances per size");
  generate->add_option("--max-value", gen.max_value, "Largest drawn value");
  generate->add_option("--seed", gen.seed, "Master seed");
  generate->add_option("--out-dir", gen.out_dir, "Directory for instance JSON files");
  generate->add_option("--histogram", gen.histogram_path, "Write a value histogram CSV here");
  generate->add_option("--bins", gen.bins, "Histogram bins")->check(CLI::PositiveNumber);

  SolveOptions sol;
  auto* solve = app.add_subcommand("solve", "Solve one instance with the decomposing solver");
  add_common(solve);
  solve->add_option("--instance", sol.instance_path, "Instance JSON (default: generate one)");
  solve->add_option("--size", sol.size, "Size of the generated instance");
  solve->add_option("--instance-seed", sol.instance_seed, "Seed of the generated instance");
  solve->add_option("--backend", sol.backend, "tabu, sa, svmc or embedded_sa");
  solve->add_option("--subproblem-size", sol.subproblem_size, "Free variables per round");
  solve->add_option("--max-rounds", sol.max_rounds, "Round limit");
  solve->add_option("--chimera-m", sol.chimera_m, "Chimera grid size for embedded_sa");
  solve->add_option("--schedule-file", sol.schedule_path, "Anneal schedule JSON for sampler backends");
  solve->add_option("--seed", sol.seed, "Solver seed");
  solve->add_option("--trace", sol.trace_path, "Write the round trace as JSON lines");

  SweepOptions sweep;
  auto* size_sweep = app.add_subcommand("size-sweep", "Solve perfect instances over a ladder of sizes");
  add_common(size_sweep);
  size_sweep->add_option("--sizes", sweep.sizes, "Instance sizes");
  size_sweep->add_option("--datasets", sweep.datasets, "Instances per size");
  size_sweep->add_option("--seed", sweep.seed, "Master seed");
  size_sweep->add_option("--threads", sweep.threads, "Worker threads");
  size_sweep->add_option("--backend", sweep.backend, "tabu, sa, svmc or embedded_sa");
  size_sweep->add_option("--summary", sweep.summary_path, "Write per-size boxplot statistics here");

  PauseOptions pause;
  auto* pause_sweep = app.add_subcommand("pause-sweep", "Compare anneal pause durations on one instance");
  add_common(pause_sweep);
  pause_sweep->add_option("--instance", pause.instance_path, "Instance JSON (default: generate one)");
  pause_sweep->add_option("--durations", pause.durations, "Pause durations in microseconds");
  pause_sweep->add_option("--repetitions", pause.repetitions, "Runs per duration");
  pause_sweep->add_option("--seed", pause.seed, "Master seed");
  pause_sweep->add_option("--backend", pause.backend, "sa or svmc");
  pause_sweep->add_option("--size", pause.size, "Size of the generated instance");
  pause_sweep->add_option("--instance-seed", pause.instance_seed, "Seed of the generated instance");
  pause_sweep->add_option("--summary", pause.summary_path, "Write per-duration boxplot statistics here");

  FitOptions fit;
  auto* fit_cmd = app.add_subcommand("fit", "Fit t = A exp(x / B) to a results table");
  add_common(fit_cmd);
  fit_cmd->add_option("--input", fit.input_path, "CSV with a header row")->required();
  fit_cmd->add_option("--x-column", fit.x_column, "Column holding x");
  fit_cmd->add_option("--t-column", fit.t_column, "Column holding t");
  fit_cmd->add_option("--aggregate", fit.aggregate, "median (per x) or none");
  fit_cmd->add_option("--residuals", fit.residuals_path, "Write per-point log residuals here");

  EmbedOptions emb;
  auto* embed = app.add_subcommand("embed", "Build or validate a Chimera clique embedding");
  add_common(embed);
  embed->add_option("--n", emb.n, "Logical variables");
  embed->add_option("--m", emb.m, "Chimera grid size (default: smallest that fits)");
  embed->add_option("--validate", emb.validate_path, "Embedding JSON to check against C_m");
  embed->add_option("--json", emb.json_path, "Write the embedding as JSON here");
  embed->add_option("--edges", emb.edges_path, "Write the Chimera edge list CSV here");

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return kExitInvalid;
  }

  try {
    if (generate->parsed()) return run_generate(common, gen);
    if (solve->parsed()) return run_solve(common, sol);
    if (size_sweep->parsed()) return run_size_sweep_cmd(common, sweep);
    if (pause_sweep->parsed()) return run_pause_sweep_cmd(common, pause);
    if (fit_cmd->parsed()) return run_fit(common, fit);
    if (embed->parsed()) return run_embed(common, emb);
  } catch (const ResourceLimit& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kExitResource;
  } catch (const InvalidArgument& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kExitInvalid;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << '\n';
    return 1;
  }
  return kExitInvalid;
}
