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

#include "arrival/solver.h"

#include <gtest/gtest.h>

#include "arrival/errors.h"
#include "arrival/generate.h"
#include "arrival/simulate.h"
#include "support/oracles.h"

namespace arrival {
namespace {

using oracle::i2;

TEST(SolverTest, I2EveryMethod) {
  const SwitchGraph graph(i2());
  const auto sim = decide_by_simulation(graph);
  EXPECT_EQ(sim.destination, VertexId::dest_dbar());
  EXPECT_EQ(sim.certificate, EdgeFlow(std::vector<BigInt>{1, 1, 1, 1, 0}));
  EXPECT_EQ(sim.stats.edge_traversals, 3);
  EXPECT_EQ(sim.stats.traversal_bound, 4);
  EXPECT_TRUE(sim.stats.bounds_ok());

  const auto subexp = decide_subexponential(graph);
  EXPECT_EQ(subexp.destination, VertexId::dest_dbar());
  EXPECT_EQ(check_switching_flow(graph, subexp.certificate).destination(),
            VertexId::dest_dbar());

  const auto fvs = decide_fvs(graph);
  EXPECT_EQ(fvs.destination, VertexId::dest_dbar());
  EXPECT_EQ(fvs.set, (std::vector<std::int32_t>{0}));
  EXPECT_EQ(fvs.stats.iteration_bound, 1);
  EXPECT_TRUE(fvs.stats.bounds_ok());
}

TEST(SolverTest, SubexpWithEmptySetReproducesTheRun) {
  const SwitchGraph graph(i2());
  SubexpOptions options;
  options.phi = Rational{1, 2};
  const auto decision = decide_subexponential(graph, options);
  EXPECT_TRUE(decision.set.empty());
  EXPECT_TRUE(decision.fixed_point.empty());
  EXPECT_EQ(decision.certificate, run_procedure(graph).profile);
  EXPECT_EQ(decision.stats.phi, (Rational{1, 2}));
}

TEST(SolverTest, FvsWithTightBudget) {
  const SwitchGraph graph(i2());
  FvsOptions options;
  options.k_max = 1;
  const auto decision = decide_fvs(graph, options);
  EXPECT_EQ(decision.set, (std::vector<std::int32_t>{0}));
  EXPECT_EQ(decision.destination, VertexId::dest_dbar());
  options.k_max = 0;
  EXPECT_THROW(decide_fvs(graph, options), FvsRefusal);
}

TEST(SolverTest, EveryTarskiMethodGivesTheSameAnswer) {
  for (std::uint64_t seed = 0; seed < 30; ++seed) {
    const SwitchGraph graph(generate({Family::kRandomTerminating, 2 + int(seed % 5), seed}));
    const auto expected = decide_by_simulation(graph).destination;
    for (const auto tarski :
         {TarskiMethod::kRecursiveBinary, TarskiMethod::kKleene, TarskiMethod::kExhaustive}) {
      SubexpOptions subexp;
      subexp.phi = Rational{9, 10};
      subexp.tarski = tarski;
      const auto a = decide_subexponential(graph, subexp);
      EXPECT_EQ(a.destination, expected);
      EXPECT_TRUE(a.stats.bounds_ok());
      FvsOptions fvs;
      fvs.tarski = tarski;
      fvs.k_max = 12;
      const auto b = decide_fvs(graph, fvs);
      EXPECT_EQ(b.destination, expected);
      EXPECT_TRUE(b.stats.bounds_ok());
      EXPECT_EQ(b.tarski, tarski);
    }
  }
}

TEST(SolverTest, ObserverSeesCertificateRun) {
  const SwitchGraph graph(i2());
  FvsOptions options;
  std::uint64_t calls = 0;
  options.observer = [&](const LatticePoint&, const MultiRunResult&) { ++calls; };
  const auto decision = decide_fvs(graph, options);
  EXPECT_EQ(calls, decision.stats.d_evaluations + 1);
}

TEST(SolverTest, DecideAll) {
  for (const bool concurrent : {false, true}) {
    AllOptions options;
    options.concurrent = concurrent;
    const SwitchGraph graph(generate({Family::kLongRunCounter, 8, 0}));
    const auto report = decide_all(graph, options);
    ASSERT_EQ(report.outcomes.size(), 3u);
    EXPECT_EQ(report.outcomes[0].method, Method::kSimulation);
    EXPECT_EQ(report.outcomes[1].method, Method::kSubexponential);
    EXPECT_EQ(report.outcomes[2].method, Method::kFvs);
    for (const auto& outcome : report.outcomes) {
      ASSERT_TRUE(outcome.decision.has_value()) << outcome.refusal;
      EXPECT_EQ(outcome.decision->destination, report.destination);
    }
  }
}

TEST(SolverTest, DecideAllRecordsRefusal) {
  AllOptions options;
  options.fvs.k_max = 2;
  const SwitchGraph graph(oracle::planted_cycles(3, 8, 4));
  const auto report = decide_all(graph, options);
  EXPECT_FALSE(report.outcomes[2].decision.has_value());
  EXPECT_FALSE(report.outcomes[2].refusal.empty());
  EXPECT_EQ(report.destination, run_procedure(graph).destination);
}

TEST(SolverTest, NonTerminatingIsRejected) {
  const SwitchGraph graph(oracle::make_instance(0, {"1", "0"}, {"1", "0"}));
  EXPECT_THROW(decide_by_simulation(graph), ValidationError);
  EXPECT_THROW(decide_subexponential(graph), ValidationError);
  EXPECT_THROW(decide_fvs(graph), ValidationError);
  EXPECT_THROW(decide_all(graph), ValidationError);
}

TEST(SolverTest, MethodNames) {
  for (const auto m : {Method::kSimulation, Method::kSubexponential, Method::kFvs}) {
    EXPECT_EQ(parse_method(to_string(m)), m);
  }
  EXPECT_THROW(parse_method("magic"), ValidationError);
}

}  // namespace
}  // namespace arrival
