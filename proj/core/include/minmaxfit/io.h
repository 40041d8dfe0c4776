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

#ifndef MINMAXFIT_IO_H_
#define MINMAXFIT_IO_H_

#include <cstdint>
#include <filesystem>
#include <iosfwd>
#include <optional>
#include <string>
#include <string_view>
#include <variant>
#include <vector>

#include "minmaxfit/fitness.h"
#include "minmaxfit/growth.h"
#include "minmaxfit/homogeneous.h"
#include "minmaxfit/tiered.h"

namespace minmaxfit {

// Shortest decimal string that parses back to exactly `value`.
std::string FormatDouble(double value);
std::optional<double> ParseDouble(std::string_view text);

using Population = std::variant<std::vector<NodeRecord>, TieredPopulation>;

inline constexpr std::string_view kNodeTableHeader = "id,tier,fitness";
inline constexpr std::string_view kSolutionHeader = "id,p,q,pU";
inline constexpr std::string_view kTieredSolutionHeader = "id,tier,p,q,pU";
inline constexpr std::string_view kTraceHeader = "iteration,upper,lower,gap";
inline constexpr std::string_view kTieredTraceHeader =
    "iteration,tier,upper,lower,gap";
inline constexpr std::string_view kGraphNodeHeader = "id,tier,fitness,degree";
inline constexpr std::string_view kDegreeHeader = "degree,count,ccdf";

// Node table `id,tier,fitness`. A blank tier column on every row gives a
// homogeneous population; otherwise every row needs a tier and the tier
// indices must be 0-based and contiguous. Row problems raise Error(kParse)
// with the line number; a header-only table raises Error(kInvalidInput).
Population ParseNodeTable(std::istream& in);
Population ReadNodeTable(const std::filesystem::path& path);

void WriteNodeTable(std::ostream& out, std::span<const NodeRecord> nodes);
void WriteNodeTable(std::ostream& out, const TieredPopulation& pop);
void WritePopulation(std::ostream& out, const Population& pop);

void WriteSolution(std::ostream& out, std::span<const NodeRecord> nodes,
                   const MinmaxSolution& solution);
void WriteSolution(std::ostream& out, const TieredPopulation& pop,
                   const TieredSolution& solution);

struct SolutionRow {
  std::uint64_t id = 0;
  std::optional<std::size_t> tier;
  double p = 0.0;
  double q = 0.0;
  double exposure = 0.0;  // the pU column
};

// Reads either solution layout. Errors as for ParseNodeTable.
std::vector<SolutionRow> ParseSolution(std::istream& in);
std::vector<SolutionRow> ReadSolution(const std::filesystem::path& path);

void WriteTrace(std::ostream& out, const MsaTrace& trace);
void WriteTieredTrace(std::ostream& out, std::span<const MsaTrace> traces);
void WriteSnapshots(std::ostream& out, std::span<const NodeRecord> nodes,
                    const MsaTrace& trace);
void WriteTieredSnapshots(std::ostream& out, const TieredPopulation& pop,
                          std::span<const MsaTrace> traces);

// One path per line: node ids in tier order, tab separated.
void WritePaths(std::ostream& out, const TieredPopulation& pop,
                const DiscoveredPathSet& paths);

void WriteEdgeList(std::ostream& out, const GrownGraph& graph);
void WriteGraphNodes(std::ostream& out, const GrownGraph& graph);
void WriteDegreeDistribution(std::ostream& out,
                             const DegreeDistribution& dist);

// Writes `contents` to `path` in binary mode; throws std::runtime_error on
// failure.
void WriteFile(const std::filesystem::path& path, std::string_view contents);

}  // namespace minmaxfit

#endif  // MINMAXFIT_IO_H_
