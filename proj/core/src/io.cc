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

#include "minmaxfit/io.h"

#include <charconv>
#include <fstream>
#include <istream>
#include <map>
#include <ostream>
#include <set>
#include <sstream>
#include <stdexcept>
#include <system_error>

#include "minmaxfit/error.h"

namespace minmaxfit {
namespace {

std::vector<std::string_view> SplitFields(std::string_view line) {
  std::vector<std::string_view> fields;
  std::size_t start = 0;
  for (;;) {
    const std::size_t comma = line.find(',', start);
    if (comma == std::string_view::npos) {
      fields.push_back(line.substr(start));
      return fields;
    }
    fields.push_back(line.substr(start, comma - start));
    start = comma + 1;
  }
}

[[noreturn]] void ParseFail(std::size_t line, const std::string& message) {
  throw Error(ErrorCode::kParse,
              "line " + std::to_string(line) + ": " + message);
}

std::uint64_t ParseId(std::string_view text, std::size_t line) {
  std::uint64_t id = 0;
  const auto [ptr, ec] =
      std::from_chars(text.data(), text.data() + text.size(), id);
  if (ec != std::errc() || ptr != text.data() + text.size() || text.empty()) {
    ParseFail(line, "malformed id '" + std::string(text) + "'");
  }
  return id;
}

std::optional<std::size_t> ParseTier(std::string_view text,
                                     std::size_t line) {
  if (text.empty()) return std::nullopt;
  std::size_t tier = 0;
  const auto [ptr, ec] =
      std::from_chars(text.data(), text.data() + text.size(), tier);
  if (ec != std::errc() || ptr != text.data() + text.size()) {
    ParseFail(line, "malformed tier '" + std::string(text) + "'");
  }
  return tier;
}

double ParseNumber(std::string_view text, std::string_view column,
                   std::size_t line) {
  const std::optional<double> value = ParseDouble(text);
  if (!value) {
    ParseFail(line, "malformed " + std::string(column) + " '" +
                        std::string(text) + "'");
  }
  return *value;
}

// Reads lines, strips a trailing CR, skips blank lines, and checks the
// header. Calls `row(fields, line_number)` for each data row.
template <typename RowFn>
void ForEachRow(std::istream& in, std::span<const std::string_view> headers,
                std::string_view* matched_header, RowFn row) {
  std::string line;
  std::size_t line_number = 0;
  bool header_seen = false;
  while (std::getline(in, line)) {
    ++line_number;
    if (!line.empty() && line.back() == '\r') line.pop_back();
    if (!header_seen) {
      for (std::string_view header : headers) {
        if (line == header) {
          header_seen = true;
          if (matched_header != nullptr) *matched_header = header;
        }
      }
      if (!header_seen) {
        ParseFail(line_number, "unexpected header '" + line + "'");
      }
      continue;
    }
    if (line.empty()) continue;
    row(SplitFields(line), line_number);
  }
  if (!header_seen) ParseFail(0, "missing header");
}

std::string Tier(const std::optional<std::size_t>& tier) {
  return tier ? std::to_string(*tier) : std::string();
}

}  // namespace

std::string FormatDouble(double value) {
  char buffer[64];
  const auto [ptr, ec] = std::to_chars(buffer, buffer + sizeof(buffer), value);
  if (ec != std::errc()) {
    throw std::runtime_error("cannot format floating-point value");
  }
  return std::string(buffer, ptr);
}

std::optional<double> ParseDouble(std::string_view text) {
  if (!text.empty() && text.front() == '+') text.remove_prefix(1);
  double value = 0.0;
  const auto [ptr, ec] =
      std::from_chars(text.data(), text.data() + text.size(), value);
  if (ec != std::errc() || ptr != text.data() + text.size() || text.empty()) {
    return std::nullopt;
  }
  return value;
}

Population ParseNodeTable(std::istream& in) {
  struct Row {
    std::uint64_t id;
    std::optional<std::size_t> tier;
    double fitness;
    std::size_t line;
  };
  std::vector<Row> rows;
  const std::string_view headers[] = {kNodeTableHeader};
  ForEachRow(in, headers, nullptr,
             [&](const std::vector<std::string_view>& fields,
                 std::size_t line) {
               if (fields.size() != 3) {
                 ParseFail(line, "expected 3 fields, got " +
                                     std::to_string(fields.size()));
               }
               Row row{ParseId(fields[0], line), ParseTier(fields[1], line),
                       ParseNumber(fields[2], "fitness", line), line};
               try {
                 ValidateFitness(row.fitness);
               } catch (const Error& e) {
                 ParseFail(line, e.what());
               }
               rows.push_back(row);
             });
  if (rows.empty()) {
    throw Error(ErrorCode::kInvalidInput, "node table has no rows");
  }

  const bool tiered = rows.front().tier.has_value();
  for (const Row& row : rows) {
    if (row.tier.has_value() != tiered) {
      ParseFail(row.line, "tier column must be blank on every row or on none");
    }
  }

  if (!tiered) {
    std::vector<NodeRecord> nodes;
    std::set<std::uint64_t> seen;
    for (const Row& row : rows) {
      if (!seen.insert(row.id).second) {
        ParseFail(row.line, "duplicate id " + std::to_string(row.id));
      }
      nodes.emplace_back(row.id, row.fitness);
    }
    return nodes;
  }

  std::map<std::size_t, std::vector<NodeRecord>> by_tier;
  std::map<std::size_t, std::set<std::uint64_t>> seen;
  for (const Row& row : rows) {
    if (!seen[*row.tier].insert(row.id).second) {
      ParseFail(row.line, "duplicate id " + std::to_string(row.id) +
                              " in tier " + std::to_string(*row.tier));
    }
    by_tier[*row.tier].emplace_back(row.id, row.fitness);
  }
  std::vector<std::vector<NodeRecord>> tiers;
  for (auto& [tier, nodes] : by_tier) {
    if (tier != tiers.size()) {
      throw Error(ErrorCode::kInvalidInput,
                  "tier indices must be 0-based and contiguous; tier " +
                      std::to_string(tiers.size()) + " is missing");
    }
    tiers.push_back(std::move(nodes));
  }
  return TieredPopulation(std::move(tiers));
}

Population ReadNodeTable(const std::filesystem::path& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) {
    throw Error(ErrorCode::kInvalidInput,
                "cannot open node table '" + path.string() + "'");
  }
  return ParseNodeTable(in);
}

void WriteNodeTable(std::ostream& out, std::span<const NodeRecord> nodes) {
  out << kNodeTableHeader << '\n';
  for (const NodeRecord& node : nodes) {
    out << node.id() << ",," << FormatDouble(node.fitness()) << '\n';
  }
}

void WriteNodeTable(std::ostream& out, const TieredPopulation& pop) {
  out << kNodeTableHeader << '\n';
  for (std::size_t k = 0; k < pop.num_tiers(); ++k) {
    for (const NodeRecord& node : pop.tier(k)) {
      out << node.id() << ',' << k << ',' << FormatDouble(node.fitness())
          << '\n';
    }
  }
}

void WritePopulation(std::ostream& out, const Population& pop) {
  if (const auto* nodes = std::get_if<std::vector<NodeRecord>>(&pop)) {
    WriteNodeTable(out, std::span<const NodeRecord>(*nodes));
  } else {
    WriteNodeTable(out, std::get<TieredPopulation>(pop));
  }
}

void WriteSolution(std::ostream& out, std::span<const NodeRecord> nodes,
                   const MinmaxSolution& solution) {
  out << kSolutionHeader << '\n';
  for (std::size_t j = 0; j < nodes.size(); ++j) {
    out << nodes[j].id() << ',' << FormatDouble(solution.p[j]) << ','
        << FormatDouble(solution.q[j]) << ','
        << FormatDouble(solution.p[j] * nodes[j].unfitness()) << '\n';
  }
}

void WriteSolution(std::ostream& out, const TieredPopulation& pop,
                   const TieredSolution& solution) {
  out << kTieredSolutionHeader << '\n';
  for (std::size_t k = 0; k < pop.num_tiers(); ++k) {
    const std::span<const NodeRecord> tier = pop.tier(k);
    for (std::size_t j = 0; j < tier.size(); ++j) {
      out << tier[j].id() << ',' << k << ','
          << FormatDouble(solution.p[k][j]) << ','
          << FormatDouble(solution.q[k][j]) << ','
          << FormatDouble(solution.p[k][j] * tier[j].unfitness()) << '\n';
    }
  }
}

std::vector<SolutionRow> ParseSolution(std::istream& in) {
  std::vector<SolutionRow> rows;
  const std::string_view headers[] = {kSolutionHeader, kTieredSolutionHeader};
  std::string_view header;
  ForEachRow(in, headers, &header,
             [&](const std::vector<std::string_view>& fields,
                 std::size_t line) {
               const bool tiered = header == kTieredSolutionHeader;
               const std::size_t expected = tiered ? 5 : 4;
               if (fields.size() != expected) {
                 ParseFail(line, "expected " + std::to_string(expected) +
                                     " fields, got " +
                                     std::to_string(fields.size()));
               }
               SolutionRow row;
               std::size_t i = 0;
               row.id = ParseId(fields[i++], line);
               if (tiered) {
                 row.tier = ParseTier(fields[i++], line);
                 if (!row.tier) ParseFail(line, "missing tier");
               }
               row.p = ParseNumber(fields[i++], "p", line);
               row.q = ParseNumber(fields[i++], "q", line);
               row.exposure = ParseNumber(fields[i++], "pU", line);
               rows.push_back(row);
             });
  if (rows.empty()) {
    throw Error(ErrorCode::kInvalidInput, "solution has no rows");
  }
  return rows;
}

std::vector<SolutionRow> ReadSolution(const std::filesystem::path& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) {
    throw Error(ErrorCode::kInvalidInput,
                "cannot open solution '" + path.string() + "'");
  }
  return ParseSolution(in);
}

void WriteTrace(std::ostream& out, const MsaTrace& trace) {
  out << kTraceHeader << '\n';
  for (const MsaRecord& r : trace.records) {
    out << r.iteration << ',' << FormatDouble(r.upper) << ','
        << FormatDouble(r.lower) << ',' << FormatDouble(r.gap) << '\n';
  }
}

void WriteTieredTrace(std::ostream& out, std::span<const MsaTrace> traces) {
  out << kTieredTraceHeader << '\n';
  for (std::size_t k = 0; k < traces.size(); ++k) {
    for (const MsaRecord& r : traces[k].records) {
      out << r.iteration << ',' << k << ',' << FormatDouble(r.upper) << ','
          << FormatDouble(r.lower) << ',' << FormatDouble(r.gap) << '\n';
    }
  }
}

void WriteSnapshots(std::ostream& out, std::span<const NodeRecord> nodes,
                    const MsaTrace& trace) {
  out << "iteration,id,p,q\n";
  for (const MsaSnapshot& s : trace.snapshots) {
    for (std::size_t j = 0; j < nodes.size(); ++j) {
      out << s.iteration << ',' << nodes[j].id() << ',' << FormatDouble(s.p[j])
          << ',' << FormatDouble(s.q[j]) << '\n';
    }
  }
}

void WriteTieredSnapshots(std::ostream& out, const TieredPopulation& pop,
                          std::span<const MsaTrace> traces) {
  out << "iteration,id,tier,p,q\n";
  for (std::size_t k = 0; k < traces.size(); ++k) {
    const std::span<const NodeRecord> tier = pop.tier(k);
    for (const MsaSnapshot& s : traces[k].snapshots) {
      for (std::size_t j = 0; j < tier.size(); ++j) {
        out << s.iteration << ',' << tier[j].id() << ',' << k << ','
            << FormatDouble(s.p[j]) << ',' << FormatDouble(s.q[j]) << '\n';
      }
    }
  }
}

void WritePaths(std::ostream& out, const TieredPopulation& pop,
                const DiscoveredPathSet& paths) {
  for (const PathSelection& path : paths) {
    for (std::size_t k = 0; k < path.nodes.size(); ++k) {
      if (k > 0) out << '\t';
      out << pop.tier(k)[path.nodes[k]].id();
    }
    out << '\n';
  }
}

void WriteEdgeList(std::ostream& out, const GrownGraph& graph) {
  for (const auto& [source, target] : graph.edges) {
    out << source << '\t' << target << '\n';
  }
}

void WriteGraphNodes(std::ostream& out, const GrownGraph& graph) {
  out << kGraphNodeHeader << '\n';
  for (const GraphNode& node : graph.nodes) {
    out << node.id << ',' << Tier(node.tier) << ','
        << FormatDouble(node.fitness) << ',' << node.degree << '\n';
  }
}

void WriteDegreeDistribution(std::ostream& out,
                             const DegreeDistribution& dist) {
  out << kDegreeHeader << '\n';
  std::size_t i = 0;
  for (const auto& [degree, count] : dist.counts) {
    out << degree << ',' << count << ','
        << FormatDouble(dist.ccdf[i++].second) << '\n';
  }
}

void WriteFile(const std::filesystem::path& path, std::string_view contents) {
  std::ofstream out(path, std::ios::binary | std::ios::trunc);
  if (!out) {
    throw std::runtime_error("cannot open '" + path.string() +
                             "' for writing");
  }
  out.write(contents.data(), static_cast<std::streamsize>(contents.size()));
  if (!out) {
    throw std::runtime_error("failed writing '" + path.string() + "'");
  }
}

}  // namespace minmaxfit
