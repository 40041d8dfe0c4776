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

#include <cmath>
#include <limits>
#include <sstream>
#include <string>
#include <vector>

#include "gtest/gtest.h"
#include "minmaxfit/error.h"
#include "oracles.h"

namespace minmaxfit {
namespace {

Population Parse(const std::string& text) {
  std::istringstream in(text);
  return ParseNodeTable(in);
}

Error ParseError(const std::string& text) {
  try {
    Parse(text);
  } catch (const Error& e) {
    return e;
  }
  ADD_FAILURE() << "no error for:\n" << text;
  return Error(ErrorCode::kParse, "");
}

TEST(FormatDoubleTest, ShortestRoundTrip) {
  EXPECT_EQ(FormatDouble(0.5), "0.5");
  EXPECT_EQ(FormatDouble(1.0 / 3), "0.3333333333333333");
  EXPECT_EQ(FormatDouble(2.0), "2");
  Rng rng(RngSeed{2});
  for (int i = 0; i < 10000; ++i) {
    const double x = std::ldexp(rng.Uniform01() + 0.5,
                                static_cast<int>(rng.NextBits() % 200) - 100);
    EXPECT_EQ(ParseDouble(FormatDouble(x)), x);
  }
}

TEST(ParseDoubleTest, RejectsJunk) {
  EXPECT_EQ(ParseDouble("+1.5"), 1.5);
  EXPECT_EQ(ParseDouble("1e-3"), 1e-3);
  EXPECT_FALSE(ParseDouble(""));
  EXPECT_FALSE(ParseDouble("1.5x"));
  EXPECT_FALSE(ParseDouble(" 1"));
}

TEST(NodeTableTest, HomogeneousRow) {
  const Population pop = Parse("id,tier,fitness\n0,,2.0\n");
  const auto& nodes = std::get<std::vector<NodeRecord>>(pop);
  ASSERT_EQ(nodes.size(), 1u);
  EXPECT_EQ(nodes[0].id(), 0u);
  EXPECT_EQ(nodes[0].fitness(), 2.0);
}

TEST(NodeTableTest, TieredRowsGroupByTier) {
  const Population pop =
      Parse("id,tier,fitness\r\n5,1,3\r\n2,0,1\r\n\r\n5,0,2\r\n");
  const auto& tiered = std::get<TieredPopulation>(pop);
  ASSERT_EQ(tiered.num_tiers(), 2u);
  ASSERT_EQ(tiered.tier(0).size(), 2u);
  EXPECT_EQ(tiered.tier(0)[0].id(), 2u);
  EXPECT_EQ(tiered.tier(0)[1].id(), 5u);
  EXPECT_EQ(tiered.tier(1)[0].fitness(), 3.0);
}

TEST(NodeTableTest, HeaderOnlyIsInvalidInput) {
  EXPECT_EQ(ParseError("id,tier,fitness\n").code(), ErrorCode::kInvalidInput);
}

TEST(NodeTableTest, NegativeFitnessNamesLine) {
  const Error e = ParseError("id,tier,fitness\n0,1,2\n5,1,-1.0\n");
  EXPECT_EQ(e.code(), ErrorCode::kParse);
  EXPECT_NE(std::string(e.what()).find("line 3"), std::string::npos)
      << e.what();
}

TEST(NodeTableTest, RowErrors) {
  for (const std::string text : {
           "id,fitness\n0,1\n",                      // wrong header
           "",                                       // no header
           "id,tier,fitness\n0,,1\n0,,2\n",          // duplicate id
           "id,tier,fitness\n0,0,1\n1,,2\n",         // mixed tier column
           "id,tier,fitness\nx,,1\n",                // bad id
           "id,tier,fitness\n0,-1,1\n",              // bad tier
           "id,tier,fitness\n0,,abc\n",              // bad fitness
           "id,tier,fitness\n0,,0\n",                // zero fitness
           "id,tier,fitness\n0,,nan\n",              // NaN fitness
           "id,tier,fitness\n0,,1,4\n",              // extra field
       }) {
    EXPECT_EQ(ParseError(text).code(), ErrorCode::kParse) << text;
  }
  // Same id in two tiers is allowed; a gap in tier numbering is not.
  EXPECT_NO_THROW(Parse("id,tier,fitness\n0,0,1\n0,1,1\n"));
  EXPECT_EQ(ParseError("id,tier,fitness\n0,0,1\n0,2,1\n").code(),
            ErrorCode::kInvalidInput);
}

TEST(NodeTableTest, RoundTripHomogeneous) {
  Rng rng(RngSeed{3});
  const auto phi = testing::MixedFitness(rng, 57);
  const auto nodes = MakeNodes(phi);
  std::ostringstream out;
  WriteNodeTable(out, nodes);
  EXPECT_EQ(out.str().substr(0, 16), "id,tier,fitness\n");
  EXPECT_EQ(std::get<std::vector<NodeRecord>>(Parse(out.str())), nodes);
}

TEST(NodeTableTest, RoundTripTiered) {
  Rng rng(RngSeed{4});
  const std::vector<std::size_t> sizes = {3, 1, 7};
  const TieredPopulation pop = testing::RandomTiered(rng, sizes);
  std::ostringstream out;
  WritePopulation(out, pop);
  EXPECT_EQ(std::get<TieredPopulation>(Parse(out.str())), pop);
}

TEST(SolutionTest, RoundTrip) {
  const auto nodes = MakeNodes(std::vector<double>{1, 2, 3});
  const MinmaxSolution s = ClosedFormSolution(nodes);
  std::ostringstream out;
  WriteSolution(out, nodes, s);
  EXPECT_EQ(out.str().substr(0, 11), "id,p,q,pU\n0");
  std::istringstream in(out.str());
  const auto rows = ParseSolution(in);
  ASSERT_EQ(rows.size(), 3u);
  for (std::size_t j = 0; j < 3; ++j) {
    EXPECT_EQ(rows[j].id, j);
    EXPECT_FALSE(rows[j].tier);
    EXPECT_EQ(rows[j].p, s.p[j]);
    EXPECT_EQ(rows[j].q, s.q[j]);
    EXPECT_EQ(rows[j].exposure, s.p[j] * nodes[j].unfitness());
  }
}

TEST(SolutionTest, RoundTripTiered) {
  const TieredPopulation pop({MakeNodes(std::vector<double>{1, 1}),
                              MakeNodes(std::vector<double>{1, 3})});
  const TieredSolution s = ClosedFormTiered(pop);
  std::ostringstream out;
  WriteSolution(out, pop, s);
  std::istringstream in(out.str());
  const auto rows = ParseSolution(in);
  ASSERT_EQ(rows.size(), 4u);
  EXPECT_EQ(rows[3].tier, 1u);
  EXPECT_EQ(rows[3].p, 0.75);
  std::istringstream empty("id,p,q,pU\n");
  EXPECT_THROW(ParseSolution(empty), Error);
}

TEST(WriterTest, TraceAndGraphLayouts) {
  MsaTrace trace;
  trace.records.push_back({1, 1.0, 0.5, 0.5});
  std::ostringstream t;
  WriteTrace(t, trace);
  EXPECT_EQ(t.str(), "iteration,upper,lower,gap\n1,1,0.5,0.5\n");

  GrownGraph g;
  g.nodes = {{0, 0, 2.0, 1}, {1, 1, 0.5, 1}};
  g.edges = {{1, 0}};
  std::ostringstream e;
  WriteEdgeList(e, g);
  EXPECT_EQ(e.str(), "1\t0\n");
  std::ostringstream n;
  WriteGraphNodes(n, g);
  EXPECT_EQ(n.str(), "id,tier,fitness,degree\n0,0,2,1\n1,1,0.5,1\n");
  std::ostringstream d;
  WriteDegreeDistribution(d, ComputeDegreeDistribution(g));
  EXPECT_EQ(d.str(), "degree,count,ccdf\n1,2,1\n");
}

TEST(WriterTest, PathsUseIds) {
  const TieredPopulation pop({{NodeRecord(10, 1.0), NodeRecord(11, 1.0)},
                              {NodeRecord(20, 1.0)}});
  DiscoveredPathSet paths = {PathSelection{{1, 0}}, PathSelection{{0, 0}}};
  std::ostringstream out;
  WritePaths(out, pop, paths);
  EXPECT_EQ(out.str(), "10\t20\n11\t20\n");
}

}  // namespace
}  // namespace minmaxfit
