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

// Top-level deciders. Each returns the destination together with a switching
// flow certificate that has already been re-verified, plus the measured
// counts and the bounds they are expected to respect.

#ifndef ARRIVAL_SOLVER_H_
#define ARRIVAL_SOLVER_H_

#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "arrival/bigint.h"
#include "arrival/core.h"
#include "arrival/decompose.h"
#include "arrival/flows.h"
#include "arrival/tarski.h"

namespace arrival {

enum class Method { kSimulation, kSubexponential, kFvs };

// "sim", "subexp", "fvs".
std::string to_string(Method method);
Method parse_method(std::string_view text);

struct DecisionStats {
  // Proper-edge traversals, summed over every multi-train run for the
  // fixed-point routes.
  BigInt edge_traversals;
  // Dispatch iterations: total, and the largest single evaluation.
  std::uint64_t loop_iterations = 0;
  std::uint64_t max_iterations_per_evaluation = 0;
  std::uint64_t d_evaluations = 0;
  std::optional<Rational> phi;
  std::size_t set_size = 0;
  // Largest distance to S u {d, dbar} (S empty for simulation).
  int ell = 0;
  double wall_time_ms = 0;

  // Simulation: traversal bound. Subexponential: the greedy iteration bound
  // for the largest train count seen. FVS: n - |S| dispatches per evaluation.
  BigInt traversal_bound;
  BigInt iteration_bound;
  BigInt evaluation_bound;
  bool traversal_bound_ok = true;
  bool iteration_bound_ok = true;
  bool evaluation_bound_ok = true;

  bool bounds_ok() const {
    return traversal_bound_ok && iteration_bound_ok && evaluation_bound_ok;
  }
};

struct Decision {
  VertexId destination = VertexId::dest_d();
  Method method = Method::kSimulation;
  EdgeFlow certificate;
  std::vector<std::int32_t> set;
  LatticePoint fixed_point;
  TarskiMethod tarski = TarskiMethod::kRecursiveBinary;
  DecisionStats stats;
};

// Evaluation bound for `method` on a k-dimensional lattice with cap N:
// 4 (ceil(log2(N+1)) + 1)^k, k N + 1 and (N+1)^k respectively.
BigInt tarski_evaluation_bound(TarskiMethod method, std::size_t k, const BigInt& cap);

// Non-terminating instances throw ValidationError in every decider.
Decision decide_by_simulation(const SwitchGraph& graph);

struct SubexpOptions {
  std::optional<Rational> phi;  // default_phi(n) when unset
  TarskiMethod tarski = TarskiMethod::kRecursiveBinary;
  // Sees every multi-train run, including the one behind the certificate.
  EvaluationObserver observer;
};

Decision decide_subexponential(const SwitchGraph& graph, const SubexpOptions& options = {});

struct FvsOptions {
  int k_max = 6;
  TarskiMethod tarski = TarskiMethod::kRecursiveBinary;
  EvaluationObserver observer;
};

// Throws FvsRefusal when no feedback vertex set of size <= k_max exists.
Decision decide_fvs(const SwitchGraph& graph, const FvsOptions& options = {});

struct MethodOutcome {
  Method method;
  std::optional<Decision> decision;
  // Set when the method declined to run (FVS size exceeded).
  std::string refusal;
};

struct ConsolidatedReport {
  VertexId destination = VertexId::dest_d();
  std::vector<MethodOutcome> outcomes;
};

struct AllOptions {
  SubexpOptions subexp;
  FvsOptions fvs;
  bool concurrent = false;
};

// Runs all three deciders and throws DisagreementError (with every
// certificate in the message) if their destinations differ.
ConsolidatedReport decide_all(const SwitchGraph& graph, const AllOptions& options = {});

}  // namespace arrival

#endif  // ARRIVAL_SOLVER_H_
