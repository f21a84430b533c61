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

#include "arrival/flows.h"

#include <gtest/gtest.h>

#include "arrival/errors.h"
#include "arrival/generate.h"
#include "arrival/simulate.h"
#include "support/oracles.h"

namespace arrival {
namespace {

using oracle::i2;

EdgeFlow i2_profile() { return EdgeFlow(std::vector<BigInt>{1, 1, 1, 1, 0}); }

const VertexId a = VertexId::proper(0);
const VertexId b = VertexId::proper(1);

TEST(FlowSumsTest, I2Profile) {
  const SwitchGraph graph(i2());
  const auto x = i2_profile();
  EXPECT_EQ(inflow(graph, x, a), 2);
  EXPECT_EQ(outflow(graph, x, a), 2);
  EXPECT_EQ(inflow(graph, x, VertexId::yard()), 0);
  EXPECT_EQ(outflow(graph, x, VertexId::yard()), 1);
  EXPECT_EQ(outflow(graph, x, VertexId::dest_d()), 0);
  EXPECT_EQ(inflow(graph, x, VertexId::dest_dbar()), 1);
  EXPECT_EQ(flow_total(x), 4);
}

TEST(FlowOrderTest, Componentwise) {
  const auto x = i2_profile();
  EXPECT_TRUE(flow_leq(x, x));
  auto y = x;
  y[4] = 3;
  EXPECT_TRUE(flow_leq(x, y));
  EXPECT_FALSE(flow_leq(y, x));
  EXPECT_THROW(flow_leq(x, EdgeFlow(3)), ValidationError);
}

TEST(SwitchingFlowTest, I2ProfileIsValidToDbar) {
  const SwitchGraph graph(i2());
  const auto verdict = check_switching_flow(graph, i2_profile());
  EXPECT_EQ(verdict.kind, VerdictKind::kValidToDbar) << to_string(verdict);
  EXPECT_EQ(verdict.destination(), VertexId::dest_dbar());
}

TEST(SwitchingFlowTest, BumpBreaksConservationAtB) {
  const SwitchGraph graph(i2());
  auto x = i2_profile();
  x[SwitchGraph::odd_edge(1)] = 1;
  const auto verdict = check_switching_flow(graph, x);
  EXPECT_FALSE(verdict.valid());
  EXPECT_EQ(verdict.vertex, b);
  EXPECT_NE(verdict.reason.find("conservation"), std::string::npos) << verdict.reason;
}

TEST(SwitchingFlowTest, ZeroFlowFailsAtYard) {
  const SwitchGraph graph(i2());
  const auto verdict = check_switching_flow(graph, EdgeFlow::zeros(graph));
  EXPECT_FALSE(verdict.valid());
  EXPECT_EQ(verdict.vertex, VertexId::yard());
}

TEST(SwitchingFlowTest, SwitchingBehavior) {
  // a sends its one train odd first: conserved, but odd runs ahead.
  const SwitchGraph graph(oracle::make_instance(0, {"D0", "D1"}, {"1", "D1"}));
  const auto verdict =
      check_switching_flow(graph, EdgeFlow(std::vector<BigInt>{1, 0, 1, 1, 0}));
  EXPECT_FALSE(verdict.valid());
  EXPECT_NE(verdict.reason.find("switching"), std::string::npos) << verdict.reason;
}

TEST(SwitchingFlowTest, WrongSlotCountIsInvalid) {
  const SwitchGraph graph(i2());
  EXPECT_FALSE(check_switching_flow(graph, EdgeFlow(4)).valid());
}

TEST(SwitchingFlowTest, EnumeratedFlowsAgreeWithChecker) {
  // Every flow the oracle enumerates passes the checker with the oracle's
  // destination, and the library never accepts a flow the oracle misses.
  for (std::uint64_t seed = 0; seed < 30; ++seed) {
    const auto instance = generate({Family::kRandomTerminating, 3, seed});
    const SwitchGraph graph(instance);
    const auto plain = oracle::plain(instance);
    std::size_t found = 0;
    oracle::enumerate_flows(plain, 3, {}, {}, [&](const oracle::PlainFlow& x) {
      EdgeFlow flow(graph.num_edges());
      flow[0] = x.yard;
      for (int v = 0; v < 3; ++v) {
        flow[SwitchGraph::even_edge(v)] = x.even[v];
        flow[SwitchGraph::odd_edge(v)] = x.odd[v];
      }
      const auto verdict = check_switching_flow(graph, flow);
      ASSERT_TRUE(verdict.valid()) << to_string(verdict);
      EXPECT_EQ(*verdict.destination() == VertexId::dest_d(),
                oracle::flow_destination(plain, x) == oracle::kD0);
      ++found;
    });
    // Brute force over the same box through the library.
    std::size_t accepted = 0;
    EdgeFlow flow(graph.num_edges());
    flow[0] = 1;
    std::vector<int> slot(6, 0);
    while (true) {
      for (int i = 0; i < 6; ++i) flow[1 + i] = slot[i];
      if (check_switching_flow(graph, flow).valid()) ++accepted;
      int i = 0;
      while (i < 6 && slot[i] == 3) slot[i++] = 0;
      if (i == 6) break;
      ++slot[i];
    }
    EXPECT_EQ(found, accepted) << serialize_instance(instance);
  }
}

TEST(CandidateFlowTest, MultiRunProfileIsValidForItsWeights) {
  const SwitchGraph graph(i2());
  const std::vector<std::int32_t> set = {1};
  const auto run = multi_run(graph, set, std::vector<BigInt>{1});
  EXPECT_EQ(check_candidate_flow(graph, set, std::vector<BigInt>{1}, run.profile).kind,
            VerdictKind::kValidCandidate);
  const auto wrong = check_candidate_flow(graph, set, std::vector<BigInt>{2}, run.profile);
  EXPECT_FALSE(wrong.valid());
  EXPECT_EQ(wrong.vertex, b);
}

TEST(CandidateFlowTest, EmptySetMatchesSwitchingCheck) {
  const SwitchGraph graph(i2());
  auto x = i2_profile();
  EXPECT_EQ(check_candidate_flow(graph, {}, {}, x).kind, VerdictKind::kValidCandidate);
  x[4] = 1;
  EXPECT_FALSE(check_candidate_flow(graph, {}, {}, x).valid());
}

TEST(CandidateFlowTest, DimensionAndMembershipErrors) {
  const SwitchGraph graph(i2());
  const auto x = i2_profile();
  const std::vector<std::int32_t> set = {1};
  EXPECT_THROW(check_candidate_flow(graph, set, {}, x), ValidationError);
  const std::vector<std::int32_t> bad = {5};
  EXPECT_THROW(check_candidate_flow(graph, bad, std::vector<BigInt>{0}, x), ValidationError);
  const std::vector<std::int32_t> twice = {1, 1};
  EXPECT_THROW(check_candidate_flow(graph, twice, std::vector<BigInt>{0, 0}, x),
               ValidationError);
}

TEST(FlowCsvTest, RoundTrip) {
  const SwitchGraph graph(i2());
  const auto csv = write_flow_csv(graph, i2_profile());
  EXPECT_EQ(csv,
            "tail,slot,head,count\nY,yard,0,1\n0,even,1,1\n0,odd,D1,1\n1,even,0,1\n"
            "1,odd,D0,0\n");
  EXPECT_EQ(read_flow_csv(graph, csv), i2_profile());
}

TEST(FlowCsvTest, AnyOrderAndMissingRows) {
  const SwitchGraph graph(i2());
  const auto x = read_flow_csv(graph,
                               "tail,slot,head,count\n1,even,0,1\n0,odd,D1,1\n"
                               "Y,yard,0,1\n0,even,1,1\n");
  EXPECT_EQ(x, i2_profile());
}

TEST(FlowCsvTest, BigCounts) {
  const SwitchGraph graph(i2());
  auto x = i2_profile();
  x[4] = pow2(100);
  EXPECT_EQ(read_flow_csv(graph, write_flow_csv(graph, x)), x);
}

TEST(FlowCsvTest, Errors) {
  const SwitchGraph graph(i2());
  EXPECT_THROW(read_flow_csv(graph, ""), ParseError);
  EXPECT_THROW(read_flow_csv(graph, "a,b,c,d\n"), ParseError);
  EXPECT_THROW(read_flow_csv(graph, "tail,slot,head,count\n0,even,D0,1\n"), ParseError);
  EXPECT_THROW(read_flow_csv(graph, "tail,slot,head,count\n0,even,1,1\n0,even,1,1\n"),
               ParseError);
  EXPECT_THROW(read_flow_csv(graph, "tail,slot,head,count\n0,up,1,1\n"), ParseError);
  EXPECT_THROW(read_flow_csv(graph, "tail,slot,head,count\n0,even,1,-1\n"), ParseError);
  EXPECT_THROW(read_flow_csv(graph, "tail,slot,head,count\n0,even,1\n"), ParseError);
}

}  // namespace
}  // namespace arrival
