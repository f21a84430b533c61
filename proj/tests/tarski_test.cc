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

#include "arrival/tarski.h"

#include <gtest/gtest.h>

#include <algorithm>

#include "arrival/decompose.h"
#include "arrival/generate.h"
#include "support/oracles.h"

namespace arrival {
namespace {

using oracle::i2;

constexpr TarskiMethod kAllMethods[] = {TarskiMethod::kRecursiveBinary, TarskiMethod::kKleene,
                                        TarskiMethod::kExhaustive};

TEST(CappedFunctionTest, I2AtB) {
  const SwitchGraph graph(i2());
  const auto problem = build_capped_function(graph, {1});
  EXPECT_EQ(problem.dimension(), 1u);
  EXPECT_EQ(problem.cap(), 4);
  EXPECT_EQ(problem.evaluate({0}), (LatticePoint{1}));
  EXPECT_EQ(problem.evaluate({1}), (LatticePoint{1}));
  EXPECT_EQ(problem.evaluate({4}), (LatticePoint{2}));
  EXPECT_EQ(problem.evaluations(), 3u);
  EXPECT_THROW(problem.evaluate({5}), ValidationError);
  EXPECT_THROW(problem.evaluate({0, 0}), ValidationError);
  problem.reset_evaluations();
  EXPECT_EQ(problem.evaluations(), 0u);
}

TEST(CappedFunctionTest, I2FixedPointEveryMethod) {
  const SwitchGraph graph(i2());
  const auto problem = build_capped_function(graph, {1});
  for (const auto method : kAllMethods) {
    EXPECT_EQ(find_fixed_point(problem, method), (LatticePoint{1})) << to_string(method);
  }
  EXPECT_EQ(all_fixed_points(problem), (std::vector<LatticePoint>{{1}}));
}

TEST(CappedFunctionTest, EmptySetIsAOnePointLattice) {
  const SwitchGraph graph(i2());
  const auto problem = build_capped_function(graph, {});
  EXPECT_EQ(problem.dimension(), 0u);
  for (const auto method : kAllMethods) {
    EXPECT_TRUE(find_fixed_point(problem, method).empty());
  }
  EXPECT_EQ(all_fixed_points(problem).size(), 1u);
}

TEST(CappedFunctionTest, RejectsBadSet) {
  const SwitchGraph graph(i2());
  EXPECT_THROW(build_capped_function(graph, {2}), ValidationError);
}

TEST(CappedFunctionTest, ObserverSeesEveryEvaluation) {
  const SwitchGraph graph(i2());
  int calls = 0;
  const auto problem = build_capped_function(
      graph, {1}, Scheduler::greedy(), [&](const LatticePoint& w, const MultiRunResult& run) {
        ++calls;
        EXPECT_EQ(w.size(), run.inflows.size());
      });
  find_fixed_point(problem, TarskiMethod::kExhaustive);
  EXPECT_EQ(calls, static_cast<int>(problem.evaluations()));
}

TarskiProblem constant(std::size_t k, int cap, int value) {
  return TarskiProblem(k, cap, [k, value](const LatticePoint&) {
    return LatticePoint(k, value);
  });
}

TEST(GenericLatticeTest, ConstantMap) {
  const auto problem = constant(3, 7, 5);
  for (const auto method : kAllMethods) {
    EXPECT_EQ(find_fixed_point(problem, method), (LatticePoint{5, 5, 5}));
  }
}

TEST(GenericLatticeTest, IdentityHasEveryPoint) {
  const TarskiProblem problem(2, 3, [](const LatticePoint& w) { return w; });
  EXPECT_EQ(all_fixed_points(problem).size(), 16u);
  EXPECT_EQ(find_fixed_point(problem, TarskiMethod::kKleene), (LatticePoint{0, 0}));
  const auto rb = find_fixed_point(problem, TarskiMethod::kRecursiveBinary);
  EXPECT_EQ(problem.evaluate(rb), rb);
}

TEST(GenericLatticeTest, KleeneFindsLeastFixedPoint) {
  // w -> max(w, 2) componentwise has fixed points {w >= 2}; the least is (2, 2).
  const TarskiProblem problem(2, 6, [](const LatticePoint& w) {
    LatticePoint image = w;
    for (auto& x : image) x = x < 2 ? BigInt(2) : x;
    return image;
  });
  EXPECT_EQ(find_fixed_point(problem, TarskiMethod::kKleene), (LatticePoint{2, 2}));
  const auto all = all_fixed_points(problem);
  EXPECT_EQ(all.size(), 25u);
  for (const auto& p : all) EXPECT_TRUE(point_leq(LatticePoint{2, 2}, p));
}

TEST(GenericLatticeTest, RecursiveBinaryStaysWithinProbeBound) {
  for (int cap : {1, 2, 7, 16, 100}) {
    for (std::size_t k = 1; k <= 3; ++k) {
      // Monotone: each coordinate moves toward a target that depends on the
      // others, clamped to the box.
      const TarskiProblem problem(k, cap, [cap](const LatticePoint& w) {
        LatticePoint image(w.size());
        BigInt sum = 0;
        for (const auto& x : w) sum += x;
        for (std::size_t i = 0; i < w.size(); ++i) {
          const BigInt target = (sum + w[i] + 1) / 2;
          image[i] = target > cap ? BigInt(cap) : target;
        }
        return image;
      });
      const auto p = find_fixed_point(problem, TarskiMethod::kRecursiveBinary);
      const auto used = problem.evaluations();
      problem.reset_evaluations();
      EXPECT_EQ(problem.evaluate(p), p);
      EXPECT_LE(used, recursive_binary_probe_bound(k, cap)) << "k=" << k << " cap=" << cap;
    }
  }
  EXPECT_EQ(recursive_binary_probe_bound(2, 4), 16);
  EXPECT_EQ(recursive_binary_probe_bound(0, 4), 1);
}

TEST(GenericLatticeTest, NonMonotoneMapIsReported) {
  // Order reversal with no fixed point: 0 -> 1, 1 -> 0.
  const TarskiProblem flip(1, 1, [](const LatticePoint& w) {
    return LatticePoint{1 - w[0]};
  });
  EXPECT_THROW(find_fixed_point(flip, TarskiMethod::kRecursiveBinary), MonotonicityViolation);
  EXPECT_THROW(find_fixed_point(flip, TarskiMethod::kKleene), MonotonicityViolation);
  EXPECT_THROW(find_fixed_point(flip, TarskiMethod::kExhaustive), CertificateError);
  try {
    find_fixed_point(flip, TarskiMethod::kKleene);
  } catch (const MonotonicityViolation& e) {
    EXPECT_TRUE(point_leq(e.lower(), e.upper()));
    EXPECT_FALSE(point_leq(e.image_lower(), e.image_upper()));
  }
}

TEST(GenericLatticeTest, ImageOutsideBoxThrows) {
  const TarskiProblem problem(1, 3, [](const LatticePoint&) { return LatticePoint{4}; });
  EXPECT_THROW(problem.evaluate({0}), ValidationError);
}

TEST(GenericLatticeTest, ExhaustiveIsGated) {
  const auto problem = constant(2, 1000, 0);
  EXPECT_THROW(all_fixed_points(problem), ValidationError);
  EXPECT_THROW(find_fixed_point(problem, TarskiMethod::kExhaustive), ValidationError);
  EXPECT_EQ(find_fixed_point(problem, TarskiMethod::kRecursiveBinary), (LatticePoint{0, 0}));
}

TEST(ArrivalLatticeTest, MethodsAgreeWithExhaustiveOnSmallInstances) {
  for (std::uint64_t seed = 0; seed < 40; ++seed) {
    const int n = 2 + static_cast<int>(seed % 5);
    const auto instance = generate({Family::kRandomTerminating, n, seed});
    const SwitchGraph graph(instance);
    std::vector<std::int32_t> set = {0};
    if (n > 3) set.push_back(n - 1);
    const auto problem = build_capped_function(graph, set);
    const auto all = all_fixed_points(problem);
    ASSERT_FALSE(all.empty());
    const auto rb = find_fixed_point(problem, TarskiMethod::kRecursiveBinary);
    const auto kl = find_fixed_point(problem, TarskiMethod::kKleene);
    EXPECT_NE(std::find(all.begin(), all.end(), rb), all.end());
    EXPECT_NE(std::find(all.begin(), all.end(), kl), all.end());
    for (const auto& p : all) EXPECT_TRUE(point_leq(kl, p));
    const auto cert = fixed_point_to_switching_flow(graph, set, rb);
    EXPECT_EQ(cert.destination, run_procedure(graph).destination)
        << serialize_instance(instance);
  }
}

TEST(ArrivalLatticeTest, CertificateFromI2) {
  const SwitchGraph graph(i2());
  const std::vector<std::int32_t> set = {1};
  const auto cert = fixed_point_to_switching_flow(graph, set, LatticePoint{1});
  EXPECT_EQ(cert.destination, VertexId::dest_dbar());
  EXPECT_EQ(cert.flow, run_procedure(graph).profile);
  EXPECT_THROW(fixed_point_to_switching_flow(graph, set, LatticePoint{2}), CertificateError);
}

TEST(TarskiMethodTest, Names) {
  for (const auto method : kAllMethods) {
    EXPECT_EQ(parse_tarski_method(to_string(method)), method);
  }
  EXPECT_THROW(parse_tarski_method("newton"), ValidationError);
  EXPECT_EQ(to_string(LatticePoint{1, 2}), "(1, 2)");
}

}  // namespace
}  // namespace arrival
