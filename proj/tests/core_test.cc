// Copyright 2026 The Arrival Authors
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

#include "arrival/core.h"

#include <gtest/gtest.h>

#include <algorithm>
#include <random>
#include <sstream>

#include "arrival/errors.h"
#include "arrival/generate.h"
#include "support/oracles.h"

namespace arrival {
namespace {

using oracle::i2;
using oracle::make_instance;

TEST(SwitchGraphTest, SmallestInstanceHasThreeSlots) {
  const SwitchGraph graph(make_instance(0, {"D0"}, {"D1"}));
  ASSERT_EQ(graph.num_edges(), 3u);
  EXPECT_EQ(graph.edge(0).tail, VertexId::yard());
  EXPECT_EQ(graph.edge(0).head, VertexId::proper(0));
  EXPECT_EQ(graph.edge(1).head, VertexId::dest_d());
  EXPECT_EQ(graph.edge(1).slot, Slot::kEven);
  EXPECT_EQ(graph.edge(2).head, VertexId::dest_dbar());
  EXPECT_EQ(graph.edge(2).slot, Slot::kOdd);
}

TEST(SwitchGraphTest, I2HasFiveSlots) {
  const SwitchGraph graph(i2());
  EXPECT_EQ(graph.num_edges(), 5u);
  EXPECT_EQ(graph.out_edges(VertexId::proper(0)).size(), 2u);
  EXPECT_EQ(graph.out_edges(VertexId::yard()).size(), 1u);
  EXPECT_TRUE(graph.out_edges(VertexId::dest_d()).empty());
  // a is entered by (Y,a) and (b,a).
  EXPECT_EQ(graph.in_edges(VertexId::proper(0)).size(), 2u);
  EXPECT_TRUE(graph.in_edges(VertexId::yard()).empty());
}

TEST(SwitchGraphTest, CoincidingSuccessorsAreDistinctSlots) {
  const SwitchGraph graph(make_instance(0, {"D0"}, {"D0"}));
  EXPECT_EQ(graph.num_edges(), 3u);
  EXPECT_NE(SwitchGraph::even_edge(0), SwitchGraph::odd_edge(0));
  EXPECT_EQ(graph.in_edges(VertexId::dest_d()).size(), 2u);
}

TEST(SwitchGraphTest, ReverseAdjacencyMatchesForward) {
  for (std::uint64_t seed = 0; seed < 20; ++seed) {
    const SwitchGraph graph(generate({Family::kRandomTerminating, 9, seed}));
    ASSERT_EQ(graph.num_edges(), 2u * 9 + 1);
    for (EdgeId e = 0; e < graph.num_edges(); ++e) {
      const auto& edge = graph.edge(e);
      const auto in = graph.in_edges(edge.head);
      const auto out = graph.out_edges(edge.tail);
      EXPECT_NE(std::find(in.begin(), in.end(), e), in.end());
      EXPECT_NE(std::find(out.begin(), out.end(), e), out.end());
    }
  }
}

TEST(SwitchGraphTest, RejectsOutOfRangeSuccessor) {
  auto bad = i2();
  bad.succ_even[1] = VertexId::proper(2);
  EXPECT_THROW(SwitchGraph{bad}, ValidationError);
  bad = i2();
  bad.succ_odd[0] = VertexId::yard();
  EXPECT_THROW(SwitchGraph{bad}, ValidationError);
  bad = i2();
  bad.origin = VertexId::dest_d();
  EXPECT_THROW(SwitchGraph{bad}, ValidationError);
  bad = i2();
  bad.succ_odd.pop_back();
  EXPECT_THROW(SwitchGraph{bad}, ValidationError);
}

TEST(TerminatingTest, I2Terminates) { EXPECT_TRUE(is_terminating(i2())); }

TEST(TerminatingTest, ClosedPairDoesNot) {
  EXPECT_FALSE(is_terminating(make_instance(0, {"1", "0"}, {"1", "0"})));
}

TEST(TerminatingTest, MatchesOracleDistances) {
  for (std::uint64_t seed = 0; seed < 200; ++seed) {
    // Raw draws, so plenty of non-terminating ones.
    std::mt19937_64 rng(seed);
    const int n = 1 + static_cast<int>(rng() % 8);
    std::vector<std::string> even, odd;
    for (int v = 0; v < n; ++v) {
      for (auto* side : {&even, &odd}) {
        const int r = static_cast<int>(rng() % (n + 2));
        side->push_back(r == n ? "D0" : r == n + 1 ? "D1" : std::to_string(r));
      }
    }
    const auto instance = make_instance(0, even, odd);
    const auto dist = oracle::distances(oracle::plain(instance));
    const bool all = std::find(dist.begin(), dist.end(), -1) == dist.end();
    EXPECT_EQ(is_terminating(instance), all) << serialize_instance(instance);
  }
}

TEST(ParseTest, ReadsI2) {
  const auto instance = parse_instance("arrival v1\nn 2\no 0\n0 1 D1\n1 0 D0\n");
  EXPECT_EQ(instance, i2());
}

TEST(ParseTest, AcceptsCommentsAndBlankLines) {
  const auto instance = parse_instance(
      "# two vertices\narrival v1\n\nn 2   # count\no 0\n1 0 D0\n0 1 D1\n");
  EXPECT_EQ(instance, i2());
}

TEST(ParseTest, RoundTripIsCanonical) {
  const std::string canonical = serialize_instance(i2());
  EXPECT_EQ(canonical, "arrival v1\nn 2\no 0\n0 1 D1\n1 0 D0\n");
  for (const auto family : {Family::kRandomTerminating, Family::kLayeredChain,
                            Family::kLongRunCounter, Family::kTwoCycleGrid}) {
    for (int n = 1; n <= 12; ++n) {
      const auto instance = generate({family, n, 3});
      const auto text = serialize_instance(instance);
      EXPECT_EQ(parse_instance(text), instance);
      EXPECT_EQ(serialize_instance(parse_instance(text)), text);
    }
  }
}

TEST(ParseTest, StreamOverload) {
  std::istringstream in(serialize_instance(i2()));
  EXPECT_EQ(parse_instance(in), i2());
}

TEST(ParseTest, MissingVertexNamesIt) {
  try {
    parse_instance("arrival v1\nn 3\no 0\n0 1 D1\n2 0 D0\n");
    FAIL() << "expected ParseError";
  } catch (const ParseError& e) {
    EXPECT_NE(std::string(e.what()).find("vertex 1"), std::string::npos) << e.what();
  }
}

TEST(ParseTest, OriginMustBeProper) {
  try {
    parse_instance("arrival v1\nn 1\no D0\n0 D0 D1\n");
    FAIL() << "expected ParseError";
  } catch (const ParseError& e) {
    EXPECT_EQ(e.line(), 3);
    EXPECT_NE(std::string(e.what()).find("origin"), std::string::npos) << e.what();
  }
}

TEST(ParseTest, ReportsLineNumbers) {
  const auto line_of = [](const std::string& text) {
    try {
      parse_instance(text);
    } catch (const ParseError& e) {
      return e.line();
    }
    return -1;
  };
  EXPECT_EQ(line_of("arrival v2\n"), 1);
  EXPECT_EQ(line_of("arrival v1\nn x\n"), 2);
  EXPECT_EQ(line_of("arrival v1\nn 2\no 5\n0 1 D1\n1 0 D0\n"), 3);
  EXPECT_EQ(line_of("arrival v1\nn 2\no 0\n0 1 D1\n0 0 D0\n"), 5);  // duplicate
  EXPECT_EQ(line_of("arrival v1\nn 2\no 0\n0 7 D1\n1 0 D0\n"), 4);  // out of range
  EXPECT_EQ(line_of("arrival v1\nn 2\no 0\n0 1 Y\n1 0 D0\n"), 4);
  EXPECT_EQ(line_of("arrival v1\nn 2\no 0\n0 1\n1 0 D0\n"), 4);
  EXPECT_EQ(line_of("arrival v1\nn 1\no 0\n0 D0 D1\n1 D0 D1\n"), 5);
}

TEST(ParseTest, NonTerminatingInstancesParse) {
  const auto instance = parse_instance("arrival v1\nn 2\no 0\n0 1 1\n1 0 0\n");
  EXPECT_FALSE(is_terminating(instance));
}

TEST(VertexTokenTest, Tokens) {
  EXPECT_EQ(to_token(VertexId::dest_d()), "D0");
  EXPECT_EQ(to_token(VertexId::dest_dbar()), "D1");
  EXPECT_EQ(to_token(VertexId::yard()), "Y");
  EXPECT_EQ(to_token(VertexId::proper(12)), "12");
  EXPECT_EQ(parse_vertex_token("D1"), VertexId::dest_dbar());
  EXPECT_EQ(parse_vertex_token("4"), VertexId::proper(4));
  EXPECT_THROW(parse_vertex_token("-4"), ValidationError);
  EXPECT_THROW(parse_vertex_token("x"), ValidationError);
}

}  // namespace
}  // namespace arrival
