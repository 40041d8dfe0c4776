// Copyright 2026 The minmaxfit Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include "cli.h"

#include <algorithm>
#include <cmath>
#include <fstream>
#include <functional>
#include <limits>
#include <map>
#include <memory>
#include <ostream>
#include <sstream>
#include <string>
#include <type_traits>
#include <utility>

#include "CLI11.hpp"
#include "json.hpp"
#include "minmaxfit/error.h"
#include "minmaxfit/fitness.h"
#include "minmaxfit/homogeneous.h"
#include "minmaxfit/io.h"
#include "minmaxfit/random.h"
#include "minmaxfit/tiered.h"

namespace minmaxfit::cli {
namespace {

using Json = nlohmann::ordered_json;

[[noreturn]] void Invalid(const std::string& message) {
  throw Error(ErrorCode::kInvalidInput, message);
}

Mode ParseMode(std::string_view name) {
  if (name == "homogeneous") return Mode::kHomogeneous;
  if (name == "tiered") return Mode::kTiered;
  Invalid("unknown mode '" + std::string(name) + "'");
}

Algorithm ParseAlgorithm(std::string_view name) {
  if (name == "closed-form") return Algorithm::kClosedForm;
  if (name == "msa") return Algorithm::kMsa;
  Invalid("unknown algorithm '" + std::string(name) + "'");
}

// A flag (or config key) and how to copy its value into a RunConfig.
struct Setting {
  std::string name;
  CLI::Option* option = nullptr;
  std::function<void(RunConfig&)> from_flag;
  std::function<void(RunConfig&, const Json&)> from_json;
};

template <typename T>
std::vector<T> JsonList(const Json& value) {
  if (value.is_array()) return value.get<std::vector<T>>();
  return {value.get<T>()};
}

// Raw flag values; copied into the config only for flags actually given.
struct FlagValues {
  std::string mode;
  std::string algorithm = "closed-form";
  std::string input;
  std::string output;
  std::int64_t iterations = 0;
  double tolerance = 0.0;
  std::string trace;
  std::int64_t trace_stride = 0;
  std::string model;
  std::vector<std::size_t> nodes;
  std::size_t links = 1;
  std::vector<double> mu;
  std::vector<double> sigma;
  std::size_t tiers = 1;
  std::uint64_t seed = 0;
  std::string edges;
  std::string nodes_out;
  std::string degrees;
  std::size_t count = 0;
  std::string solution;
};

class SettingTable {
 public:
  SettingTable(CLI::App* app, FlagValues* flags) : app_(app), flags_(flags) {}

  template <typename T, typename Store>
  CLI::Option* Add(const std::string& name, T* flag_value,
                   const std::string& help, Store store) {
    CLI::Option* option = app_->add_option("--" + name, *flag_value, help);
    // Per-tier lists: repeat the flag, or separate values with commas.
    if constexpr (requires { typename T::value_type; } &&
                  !std::is_same_v<T, std::string>) {
      option->delimiter(',');
    }
    settings_.push_back(
        {name, option,
         [flag_value, store](RunConfig& config) { store(config, *flag_value); },
         [store](RunConfig& config, const Json& value) {
           if constexpr (std::is_same_v<T, std::string>) {
             store(config, value.get<std::string>());
           } else if constexpr (requires { typename T::value_type; }) {
             store(config, JsonList<typename T::value_type>(value));
           } else {
             store(config, value.get<T>());
           }
         }});
    return option;
  }

  // Config file first, then every flag that appeared on the command line.
  void Apply(const std::filesystem::path& config_path,
             RunConfig& config) const {
    if (!config_path.empty()) ApplyFile(config_path, config);
    for (const Setting& setting : settings_) {
      if (setting.option->count() > 0) setting.from_flag(config);
    }
  }

  FlagValues& flags() { return *flags_; }

 private:
  void ApplyFile(const std::filesystem::path& path, RunConfig& config) const {
    std::ifstream in(path, std::ios::binary);
    if (!in) Invalid("cannot read config file " + path.string());
    Json document;
    try {
      document = Json::parse(in);
    } catch (const Json::exception& e) {
      Invalid("config file " + path.string() + ": " + e.what());
    }
    if (!document.is_object()) {
      Invalid("config file " + path.string() + ": expected a JSON object");
    }
    for (const auto& [key, value] : document.items()) {
      const auto it = std::find_if(
          settings_.begin(), settings_.end(),
          [&key](const Setting& s) { return s.name == key; });
      if (it == settings_.end()) {
        Invalid("config file " + path.string() + ": unknown key '" + key +
                "' for " + std::string(CommandName(config.command)));
      }
      try {
        it->from_json(config, value);
      } catch (const Json::exception& e) {
        Invalid("config key '" + key + "': " + e.what());
      }
    }
  }

  CLI::App* app_;
  FlagValues* flags_;
  std::vector<Setting> settings_;
};

void AddSolveSettings(SettingTable& table) {
  FlagValues& f = table.flags();
  table
      .Add("mode", &f.mode, "homogeneous or tiered (default: from input)",
           [](RunConfig& c, const std::string& v) { c.mode = ParseMode(v); })
      ->check(CLI::IsMember({"homogeneous", "tiered"}));
  table
      .Add("algorithm", &f.algorithm, "closed-form or msa",
           [](RunConfig& c, const std::string& v) {
             c.algorithm = ParseAlgorithm(v);
           })
      ->check(CLI::IsMember({"closed-form", "msa"}));
  table.Add("input", &f.input, "node table (id,tier,fitness)",
            [](RunConfig& c, const std::string& v) { c.input = v; });
  table.Add("output", &f.output, "solution table",
            [](RunConfig& c, const std::string& v) { c.output = v; });
  table.Add("iterations", &f.iterations, "MSA iteration budget",
            [](RunConfig& c, std::int64_t v) { c.iterations = v; });
  table.Add("tol", &f.tolerance, "MSA relative-gap tolerance",
            [](RunConfig& c, double v) { c.tolerance = v; });
  table.Add("trace", &f.trace, "MSA bound trace",
            [](RunConfig& c, const std::string& v) { c.trace = v; });
  table.Add("trace-stride", &f.trace_stride,
            "record bounds and p/q snapshots every s iterations",
            [](RunConfig& c, std::int64_t v) { c.trace_stride = v; });
}

void AddGrowSettings(SettingTable& table) {
  FlagValues& f = table.flags();
  table
      .Add("model", &f.model, "growth model",
           [](RunConfig& c, const std::string& v) {
             c.model = ParseGrowthModel(v);
           })
      ->check(CLI::IsMember({"barabasi-albert", "bianconi-barabasi",
                             "fitness-proportional", "minmax-derived"}));
  table.Add("nodes", &f.nodes, "node count, or one per tier",
            [](RunConfig& c, const std::vector<std::size_t>& v) {
              c.nodes = v;
            });
  table.Add("links", &f.links, "links per new node",
            [](RunConfig& c, std::size_t v) { c.links = v; });
  table.Add("mu", &f.mu, "log-normal mu, or one per tier",
            [](RunConfig& c, const std::vector<double>& v) { c.mu = v; });
  table.Add("sigma", &f.sigma, "log-normal sigma, or one per tier",
            [](RunConfig& c, const std::vector<double>& v) { c.sigma = v; });
  table.Add("tiers", &f.tiers, "number of tiers",
            [](RunConfig& c, std::size_t v) { c.tiers = v; });
  table.Add("seed", &f.seed, "random seed",
            [](RunConfig& c, std::uint64_t v) { c.seed = v; });
  table.Add("edges", &f.edges, "edge list output",
            [](RunConfig& c, const std::string& v) { c.edges = v; });
  table.Add("nodes-out", &f.nodes_out, "node table output",
            [](RunConfig& c, const std::string& v) { c.nodes_out = v; });
  table.Add("degrees", &f.degrees, "degree distribution output",
            [](RunConfig& c, const std::string& v) { c.degrees = v; });
}

void AddSampleSettings(SettingTable& table) {
  FlagValues& f = table.flags();
  table.Add("mu", &f.mu, "log-normal mu, or one per tier",
            [](RunConfig& c, const std::vector<double>& v) { c.mu = v; });
  table.Add("sigma", &f.sigma, "log-normal sigma, or one per tier",
            [](RunConfig& c, const std::vector<double>& v) { c.sigma = v; });
  table.Add("count", &f.count, "nodes per tier",
            [](RunConfig& c, std::size_t v) { c.count = v; });
  table.Add("seed", &f.seed, "random seed",
            [](RunConfig& c, std::uint64_t v) { c.seed = v; });
  table.Add("output", &f.output, "node table output",
            [](RunConfig& c, const std::string& v) { c.output = v; });
}

void AddCheckSettings(SettingTable& table) {
  FlagValues& f = table.flags();
  table.Add("input", &f.input, "node table",
            [](RunConfig& c, const std::string& v) { c.input = v; });
  table.Add("solution", &f.solution, "solution table to verify",
            [](RunConfig& c, const std::string& v) { c.solution = v; });
  table.Add("tol", &f.tolerance, "verification tolerance (default 1e-9)",
            [](RunConfig& c, double v) { c.tolerance = v; });
}

// ---------------------------------------------------------------------------
// Output helpers.

template <typename WriteFn>
void Emit(const std::filesystem::path& path, WriteFn write) {
  if (path.empty()) return;
  std::ostringstream buffer;
  write(buffer);
  WriteFile(path, buffer.str());
}

// `sol.csv` -> `sol.<suffix>`.
std::filesystem::path Sibling(const std::filesystem::path& path,
                              const std::string& suffix) {
  std::filesystem::path result = path;
  result.replace_extension(suffix);
  return result;
}

// Values that may be given once for every tier or once per tier.
template <typename T>
std::vector<T> PerTier(const std::vector<T>& values, std::size_t tiers,
                       T fallback, const char* name) {
  if (values.empty()) return std::vector<T>(tiers, fallback);
  if (values.size() == 1) return std::vector<T>(tiers, values.front());
  if (values.size() != tiers) {
    Invalid(std::string("--") + name + " has " +
            std::to_string(values.size()) + " values for " +
            std::to_string(tiers) + " tiers");
  }
  return values;
}

// Tier count implied by --tiers and the per-tier lists.
std::size_t TierCount(const RunConfig& config) {
  std::size_t tiers = config.tiers.value_or(1);
  for (std::size_t n : {config.nodes.size(), config.mu.size(),
                        config.sigma.size()}) {
    if (n > 1 && !config.tiers) tiers = std::max(tiers, n);
  }
  return tiers;
}

int Finish(std::ostream& out, Json summary, bool converged,
           const std::filesystem::path& summary_path) {
  summary["converged"] = converged;
  const std::string line = summary.dump();
  out << line << '\n';
  if (!summary_path.empty()) WriteFile(summary_path, line + "\n");
  return converged ? kExitOk : kExitNotConverged;
}

// ---------------------------------------------------------------------------
// solve

MsaOptions HomogeneousOptions(const RunConfig& config) {
  MsaOptions options;
  options.max_iterations = *config.iterations;
  options.gap_tolerance = *config.tolerance;
  options.trace_stride = config.trace_stride;
  return options;
}

int SolveHomogeneous(const RunConfig& config,
                     const std::vector<NodeRecord>& nodes, std::ostream& out) {
  Json summary;
  summary["command"] = "solve";
  summary["mode"] = "homogeneous";
  summary["algorithm"] = AlgorithmName(config.algorithm);
  summary["nodes"] = nodes.size();

  MinmaxSolution solution;
  bool converged = true;
  if (config.algorithm == Algorithm::kClosedForm) {
    solution = ClosedFormSolution(nodes);
    summary["value"] = solution.value;
    summary["lambda"] = solution.lambda;
    summary["gap"] = 0.0;
    summary["iterations"] = 0;
  } else {
    MsaResult result = SolveMsa(nodes, HomogeneousOptions(config));
    solution = std::move(result.solution);
    converged = result.converged;
    summary["value"] = solution.value;
    summary["lambda"] = solution.lambda;
    summary["gap"] = result.relative_gap;
    summary["iterations"] = result.iterations;
    Emit(config.trace,
         [&](std::ostream& os) { WriteTrace(os, result.trace); });
    if (config.trace_stride > 0) {
      Emit(Sibling(config.trace, ".snapshots.csv"), [&](std::ostream& os) {
        WriteSnapshots(os, nodes, result.trace);
      });
    }
  }
  Emit(config.output,
       [&](std::ostream& os) { WriteSolution(os, nodes, solution); });
  return Finish(out, std::move(summary), converged,
                config.output.empty()
                    ? std::filesystem::path()
                    : Sibling(config.output, ".summary.json"));
}

int SolveTiered(const RunConfig& config, const TieredPopulation& pop,
                std::ostream& out) {
  Json summary;
  summary["command"] = "solve";
  summary["mode"] = "tiered";
  summary["algorithm"] = AlgorithmName(config.algorithm);
  summary["nodes"] = pop.num_nodes();
  summary["tiers"] = pop.num_tiers();

  TieredSolution solution;
  bool converged = true;
  if (config.algorithm == Algorithm::kClosedForm) {
    solution = ClosedFormTiered(pop);
    summary["values"] = solution.values;
    summary["lambdas"] = solution.lambdas;
    summary["gaps"] = std::vector<double>(pop.num_tiers(), 0.0);
    summary["iterations"] = 0;
  } else {
    TieredMsaOptions options;
    options.max_iterations = *config.iterations;
    options.gap_tolerance = *config.tolerance;
    options.trace_stride = config.trace_stride;
    TieredMsaResult result = SolveMsaTiered(pop, options);
    solution = std::move(result.solution);
    converged = result.converged;
    summary["values"] = solution.values;
    summary["lambdas"] = solution.lambdas;
    summary["gaps"] = result.relative_gaps;
    summary["iterations"] = result.iterations;
    summary["paths"] = result.paths.size();
    Emit(config.trace,
         [&](std::ostream& os) { WriteTieredTrace(os, result.traces); });
    if (config.trace_stride > 0) {
      Emit(Sibling(config.trace, ".snapshots.csv"), [&](std::ostream& os) {
        WriteTieredSnapshots(os, pop, result.traces);
      });
    }
    if (!config.output.empty()) {
      Emit(Sibling(config.output, ".paths.tsv"), [&](std::ostream& os) {
        WritePaths(os, pop, result.paths);
      });
    }
  }
  Emit(config.output,
       [&](std::ostream& os) { WriteSolution(os, pop, solution); });
  return Finish(out, std::move(summary), converged,
                config.output.empty()
                    ? std::filesystem::path()
                    : Sibling(config.output, ".summary.json"));
}

int Solve(const RunConfig& config, std::ostream& out) {
  const Population population = ReadNodeTable(config.input);
  const auto* tiered = std::get_if<TieredPopulation>(&population);
  if (config.mode == Mode::kTiered && tiered == nullptr) {
    Invalid("--mode tiered needs a node table with a tier column");
  }
  if (config.mode == Mode::kHomogeneous && tiered != nullptr) {
    Invalid("--mode homogeneous given, but the node table has tiers");
  }
  if (tiered != nullptr) return SolveTiered(config, *tiered, out);
  return SolveHomogeneous(config, std::get<std::vector<NodeRecord>>(population),
                          out);
}

// ---------------------------------------------------------------------------
// grow

int Grow(const RunConfig& config, std::ostream& out) {
  const std::size_t tiers = TierCount(config);
  const std::vector<double> mu = PerTier(config.mu, tiers, 0.0, "mu");
  const std::vector<double> sigma = PerTier(config.sigma, tiers, 1.0, "sigma");
  const std::vector<std::size_t> sizes =
      PerTier<std::size_t>(config.nodes, tiers, 100, "nodes");

  GrownGraph graph;
  if (tiers == 1) {
    GrowthConfig growth;
    growth.model = config.model;
    growth.target_nodes = sizes.front();
    growth.links_per_node = config.links;
    growth.fitness = LognormalSpec{mu.front(), sigma.front()};
    growth.seed = RngSeed{config.seed};
    graph = GrowHomogeneous(growth);
  } else {
    if (config.links != 1) {
      Invalid("tiered growth adds exactly one upstream link per node");
    }
    TieredGrowthConfig growth;
    for (std::size_t k = 0; k < tiers; ++k) {
      growth.tier_fitness.push_back(LognormalSpec{mu[k], sigma[k]});
    }
    growth.tier_sizes = sizes;
    growth.model = config.model;
    growth.seed = RngSeed{config.seed};
    graph = GrowTiered(growth);
  }

  const DegreeDistribution degrees = ComputeDegreeDistribution(graph);
  Emit(config.edges, [&](std::ostream& os) { WriteEdgeList(os, graph); });
  Emit(config.nodes_out, [&](std::ostream& os) { WriteGraphNodes(os, graph); });
  Emit(config.degrees,
       [&](std::ostream& os) { WriteDegreeDistribution(os, degrees); });

  Json summary;
  summary["command"] = "grow";
  summary["model"] = GrowthModelName(config.model);
  summary["tiers"] = tiers;
  summary["nodes"] = graph.nodes.size();
  summary["edges"] = graph.edges.size();
  summary["max_degree"] = degrees.counts.empty() ? 0 : degrees.counts.rbegin()->first;
  summary["seed"] = config.seed;
  return Finish(out, std::move(summary), true, {});
}

// ---------------------------------------------------------------------------
// sample

int Sample(const RunConfig& config, std::ostream& out) {
  const std::size_t tiers = TierCount(config);
  const std::vector<double> mu = PerTier(config.mu, tiers, 0.0, "mu");
  const std::vector<double> sigma = PerTier(config.sigma, tiers, 1.0, "sigma");

  // One stream for the whole table, tier after tier.
  Rng rng(RngSeed{config.seed});
  std::vector<std::vector<NodeRecord>> groups(tiers);
  std::uint64_t next_id = 0;
  double total = 0.0;
  for (std::size_t k = 0; k < tiers; ++k) {
    for (double fitness :
         SampleLognormal(LognormalSpec{mu[k], sigma[k]}, config.count, rng)) {
      groups[k].emplace_back(next_id++, fitness);
      total += fitness;
    }
  }
  if (tiers == 1) {
    Emit(config.output,
         [&](std::ostream& os) { WriteNodeTable(os, groups.front()); });
  } else {
    const TieredPopulation pop(std::move(groups));
    Emit(config.output, [&](std::ostream& os) { WriteNodeTable(os, pop); });
  }

  Json summary;
  summary["command"] = "sample";
  summary["tiers"] = tiers;
  summary["nodes"] = next_id;
  summary["total_fitness"] = total;
  summary["seed"] = config.seed;
  return Finish(out, std::move(summary), true, {});
}

// ---------------------------------------------------------------------------
// check

struct TierCandidate {
  std::vector<double> p, q, exposure;
};

// Lines the solution rows up with the population; every node needs exactly
// one row and every row a node.
std::vector<TierCandidate> AlignSolution(
    const std::vector<std::span<const NodeRecord>>& groups, bool tiered,
    const std::vector<SolutionRow>& rows) {
  std::map<std::pair<std::size_t, std::uint64_t>, const SolutionRow*> by_key;
  for (const SolutionRow& row : rows) {
    if (row.tier.has_value() != tiered) {
      Invalid("solution layout does not match the node table");
    }
    const auto key = std::make_pair(row.tier.value_or(0), row.id);
    if (!by_key.emplace(key, &row).second) {
      Invalid("solution repeats node " + std::to_string(row.id));
    }
  }
  std::vector<TierCandidate> candidates(groups.size());
  std::size_t matched = 0;
  for (std::size_t k = 0; k < groups.size(); ++k) {
    for (const NodeRecord& node : groups[k]) {
      const auto it = by_key.find({k, node.id()});
      if (it == by_key.end()) {
        Invalid("solution has no row for node " + std::to_string(node.id()));
      }
      candidates[k].p.push_back(it->second->p);
      candidates[k].q.push_back(it->second->q);
      candidates[k].exposure.push_back(it->second->exposure);
      ++matched;
    }
  }
  if (matched != rows.size()) {
    Invalid("solution has rows for nodes not in the node table");
  }
  return candidates;
}

int Check(const RunConfig& config, std::ostream& out) {
  const double tol = config.tolerance.value_or(1e-9);
  const Population population = ReadNodeTable(config.input);
  const std::vector<SolutionRow> rows = ReadSolution(config.solution);

  std::vector<std::span<const NodeRecord>> groups;
  const auto* tiered = std::get_if<TieredPopulation>(&population);
  if (tiered != nullptr) {
    for (std::size_t k = 0; k < tiered->num_tiers(); ++k) {
      groups.push_back(tiered->tier(k));
    }
  } else {
    groups.push_back(std::get<std::vector<NodeRecord>>(population));
  }
  const std::vector<TierCandidate> candidates =
      AlignSolution(groups, tiered != nullptr, rows);

  bool passed = true;
  for (std::size_t k = 0; k < groups.size(); ++k) {
    const TierCandidate& c = candidates[k];
    // The file carries p and q; V and lambda are the bounds they imply.
    double value = 0.0;
    double lambda = std::numeric_limits<double>::infinity();
    double worst_column = 0.0;
    for (std::size_t j = 0; j < groups[k].size(); ++j) {
      const double u = groups[k][j].unfitness();
      value = std::max(value, c.p[j] * u);
      lambda = std::min(lambda, c.q[j] * u);
      worst_column = std::max(worst_column, std::abs(c.exposure[j] - c.p[j] * u));
    }
    KktReport report = VerifyKkt(groups[k], CandidateView{c.p, c.q, value, lambda}, tol);
    report.checks.push_back(
        {"exposure-column", !(worst_column > tol), worst_column});

    const std::string prefix =
        tiered != nullptr ? "tier " + std::to_string(k) + " " : "";
    for (const KktCheck& check : report.checks) {
      out << prefix << (check.passed ? "PASS " : "FAIL ") << check.name
          << " worst=" << FormatDouble(check.worst_violation) << '\n';
      passed = passed && check.passed;
    }
  }

  Json summary;
  summary["command"] = "check";
  summary["tol"] = tol;
  summary["passed"] = passed;
  out << summary.dump() << '\n';
  return passed ? kExitOk : kExitInvalid;
}

}  // namespace

std::string_view CommandName(Command command) {
  switch (command) {
    case Command::kSolve:
      return "solve";
    case Command::kGrow:
      return "grow";
    case Command::kSample:
      return "sample";
    case Command::kCheck:
      return "check";
  }
  return "unknown";
}

std::string_view ModeName(Mode mode) {
  return mode == Mode::kTiered ? "tiered" : "homogeneous";
}

std::string_view AlgorithmName(Algorithm algorithm) {
  return algorithm == Algorithm::kMsa ? "msa" : "closed-form";
}

void RunConfig::Validate() const {
  switch (command) {
    case Command::kSolve:
      if (input.empty()) Invalid("solve needs --input");
      if (algorithm == Algorithm::kMsa) {
        if (!iterations) Invalid("--algorithm msa needs --iterations");
        if (!tolerance) Invalid("--algorithm msa needs --tol");
        if (*iterations < 1) Invalid("--iterations must be >= 1");
        if (!(*tolerance > 0.0)) Invalid("--tol must be > 0");
      } else if (!trace.empty()) {
        Invalid("--trace needs --algorithm msa");
      }
      if (trace_stride < 0) Invalid("--trace-stride must be >= 0");
      break;
    case Command::kGrow:
      if (tiers && *tiers < 1) Invalid("--tiers must be >= 1");
      for (std::size_t n : nodes) {
        if (n < 1) Invalid("--nodes must be >= 1");
      }
      break;
    case Command::kSample:
      if (output.empty()) Invalid("sample needs --output");
      if (count < 1) Invalid("sample needs --count >= 1");
      if (tiers && *tiers < 1) Invalid("--tiers must be >= 1");
      break;
    case Command::kCheck:
      if (input.empty()) Invalid("check needs --input");
      if (solution.empty()) Invalid("check needs --solution");
      if (tolerance && !(*tolerance >= 0.0)) Invalid("--tol must be >= 0");
      break;
  }
}

std::variant<RunConfig, int> ParseCommandLine(int argc,
                                              const char* const* argv,
                                              std::ostream& out,
                                              std::ostream& err) {
  CLI::App app{"Min-max fitness attachment: solver and growth simulator",
               "minmaxfit"};
  app.require_subcommand(1);

  struct Entry {
    Command command;
    CLI::App* app;
    std::unique_ptr<FlagValues> flags;
    std::unique_ptr<SettingTable> table;
    std::string config_path;
  };
  std::vector<Entry> entries;
  auto add = [&](Command command, const char* help,
                 void (*add_settings)(SettingTable&)) {
    Entry entry{command, app.add_subcommand(std::string(CommandName(command)), help),
                std::make_unique<FlagValues>(), nullptr, {}};
    entry.table = std::make_unique<SettingTable>(entry.app, entry.flags.get());
    add_settings(*entry.table);
    entries.push_back(std::move(entry));
  };
  add(Command::kSolve, "solve the min-max attachment program", AddSolveSettings);
  add(Command::kGrow, "grow a network", AddGrowSettings);
  add(Command::kSample, "sample a log-normal node table", AddSampleSettings);
  add(Command::kCheck, "verify a solution's optimality conditions",
      AddCheckSettings);
  for (Entry& entry : entries) {
    entry.app->add_option("--config", entry.config_path,
                          "JSON file of defaults; flags take precedence");
  }

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int status = app.exit(e, out, err);
    return status == 0 ? kExitOk : kExitInvalid;
  }

  for (const Entry& entry : entries) {
    if (!entry.app->parsed()) continue;
    RunConfig config;
    config.command = entry.command;
    try {
      entry.table->Apply(entry.config_path, config);
    } catch (const Error& e) {
      err << "error: " << e.what() << '\n';
      return kExitInvalid;
    }
    return config;
  }
  return kExitInvalid;  // unreachable: a subcommand is required
}

int Run(const RunConfig& config, std::ostream& out, std::ostream& err) {
  try {
    config.Validate();
    switch (config.command) {
      case Command::kSolve:
        return Solve(config, out);
      case Command::kGrow:
        return Grow(config, out);
      case Command::kSample:
        return Sample(config, out);
      case Command::kCheck:
        return Check(config, out);
    }
  } catch (const Error& e) {
    err << "error: " << e.what() << '\n';
  } catch (const std::exception& e) {
    err << "error: " << e.what() << '\n';
  }
  return kExitInvalid;
}

int Main(int argc, const char* const* argv, std::ostream& out,
         std::ostream& err) {
  std::variant<RunConfig, int> parsed = ParseCommandLine(argc, argv, out, err);
  if (const int* status = std::get_if<int>(&parsed)) return *status;
  return Run(std::get<RunConfig>(parsed), out, err);
}

}  // namespace minmaxfit::cli
