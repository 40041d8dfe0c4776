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

#ifndef MINMAXFIT_TOOLS_CLI_H_
#define MINMAXFIT_TOOLS_CLI_H_

#include <cstddef>
#include <cstdint>
#include <filesystem>
#include <iosfwd>
#include <optional>
#include <string_view>
#include <variant>
#include <vector>

#include "minmaxfit/growth.h"

namespace minmaxfit::cli {

inline constexpr int kExitOk = 0;
inline constexpr int kExitInvalid = 2;
inline constexpr int kExitNotConverged = 3;

enum class Command { kSolve, kGrow, kSample, kCheck };
enum class Mode { kHomogeneous, kTiered };
enum class Algorithm { kClosedForm, kMsa };

std::string_view CommandName(Command command);
std::string_view ModeName(Mode mode);
std::string_view AlgorithmName(Algorithm algorithm);

// Everything one invocation needs. Empty paths mean "not requested".
struct RunConfig {
  Command command = Command::kSolve;

  // solve
  std::optional<Mode> mode;  // unset: taken from the node table
  Algorithm algorithm = Algorithm::kClosedForm;
  std::filesystem::path input;
  std::filesystem::path output;
  std::optional<std::int64_t> iterations;
  std::optional<double> tolerance;  // solve and check
  std::filesystem::path trace;
  std::int64_t trace_stride = 0;

  // grow and sample
  GrowthModel model = GrowthModel::kFitnessProportional;
  std::vector<std::size_t> nodes;  // one entry, or one per tier
  std::size_t links = 1;
  std::vector<double> mu;     // one entry, or one per tier
  std::vector<double> sigma;  // one entry, or one per tier
  std::optional<std::size_t> tiers;
  std::uint64_t seed = 0;
  std::filesystem::path edges;
  std::filesystem::path nodes_out;
  std::filesystem::path degrees;
  std::size_t count = 0;

  // check
  std::filesystem::path solution;

  // Throws Error(kInvalidInput) naming the first problem found.
  void Validate() const;
};

// Parses `argv` (including the program name). Flags override values read
// from `--config`. Returns the exit status instead when parsing ends the run
// (help, usage error, bad config file); messages go to `out` / `err`.
std::variant<RunConfig, int> ParseCommandLine(int argc,
                                              const char* const* argv,
                                              std::ostream& out,
                                              std::ostream& err);

// Executes a validated config: writes the requested files and one summary
// line of JSON to `out`. Returns kExitOk, kExitInvalid or kExitNotConverged.
int Run(const RunConfig& config, std::ostream& out, std::ostream& err);

// ParseCommandLine followed by Run.
int Main(int argc, const char* const* argv, std::ostream& out,
         std::ostream& err);

}  // namespace minmaxfit::cli

#endif  // MINMAXFIT_TOOLS_CLI_H_
