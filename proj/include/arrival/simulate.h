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

// The single-train run and the multi-train run.
//
// The multi-train run starts one train at Y and w_i trains at each s_i of an
// ordered set S, then repeatedly picks a vertex outside S holding waiting
// trains and dispatches tau of them: ceil(tau/2) to its current successor,
// floor(tau/2) to its next one, swapping the two when tau is odd. Trains that
// reach S or a destination stop. The resulting edge profile is the unique
// minimal candidate switching flow and does not depend on the schedule.

#ifndef ARRIVAL_SIMULATE_H_
#define ARRIVAL_SIMULATE_H_

#include <cstdint>
#include <functional>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "arrival/bigint.h"
#include "arrival/core.h"
#include "arrival/flows.h"

namespace arrival {

// One dispatch along one edge slot. The single-train run emits one row per
// step with tau = 1.
// One row per edge used by a dispatch; `tau` is the dispatch size, so a
// dispatch with tau >= 2 yields two rows. Step 0 is the yard edge and, for
// multi-train runs, the start phase.
struct TraceRow {
  std::uint64_t step;
  VertexId vertex;
  BigInt tau;
  Slot slot;
  VertexId head;
};

// CSV `step,vertex,tau,slot,head`.
std::string write_trace_csv(std::span<const TraceRow> rows);

struct RunResult {
  VertexId destination = VertexId::dest_d();
  EdgeFlow profile;
  // Visits per proper vertex (times the loop head saw the train there).
  std::vector<std::uint64_t> visits;
  std::uint64_t proper_traversals = 0;
};

// n * 2^n + 1, saturated to UINT64_MAX.
std::uint64_t default_step_cap(std::int32_t n);

// Throws StepCapExceeded after `step_cap` proper-edge traversals (default
// `default_step_cap(n)`).
RunResult run_procedure(const SwitchGraph& graph,
                        std::optional<std::uint64_t> step_cap = std::nullopt,
                        std::vector<TraceRow>* trace = nullptr);

enum class Strategy { kGreedy, kRoundRobin, kTopological, kSingleStep, kRandom };

// How the multi-train run picks (v, tau). Ties go to the lowest vertex index.
//   kGreedy       v maximizing waiting trains, tau = all of them
//   kRoundRobin   cycle through V \ S in index order, tau = all waiting
//   kTopological  V \ S must induce an acyclic graph; one sweep in
//                 topological order, tau = all waiting
//   kSingleStep   tau = 1, following one train until it stops
//   kRandom       uniform v among those with trains, uniform tau (seeded)
struct Scheduler {
  Strategy strategy = Strategy::kGreedy;
  std::uint64_t seed = 0;

  static Scheduler greedy() { return {Strategy::kGreedy, 0}; }
  static Scheduler round_robin() { return {Strategy::kRoundRobin, 0}; }
  static Scheduler topological() { return {Strategy::kTopological, 0}; }
  static Scheduler single_step() { return {Strategy::kSingleStep, 0}; }
  static Scheduler random(std::uint64_t seed) { return {Strategy::kRandom, seed}; }

  friend bool operator==(const Scheduler&, const Scheduler&) = default;
};

// "greedy", "round-robin", "topological", "single-step", "random:<seed>".
std::string to_string(const Scheduler& scheduler);
Scheduler parse_scheduler(std::string_view text);

// Live state of a multi-train run, as seen by observers.
struct MultiRunState {
  // Waiting trains at proper vertices outside S; arrivals at S, d and dbar.
  // Indexed by graph node (proper v -> v, d -> n, dbar -> n+1).
  std::vector<BigInt> waiting;
  // Per proper vertex: true when the current successor is the odd one.
  std::vector<bool> current_is_odd;
  EdgeFlow traversals;
  std::uint64_t iteration = 0;

  EdgeId current_edge(std::int32_t v) const {
    return current_is_odd[v] ? SwitchGraph::odd_edge(v) : SwitchGraph::even_edge(v);
  }
  EdgeId next_edge(std::int32_t v) const {
    return current_is_odd[v] ? SwitchGraph::even_edge(v) : SwitchGraph::odd_edge(v);
  }
};

struct MultiRunHooks {
  // Called after the start phase (iteration 0) and after every dispatch.
  std::function<void(const MultiRunState&)> on_step;
  std::vector<TraceRow>* trace = nullptr;
};

struct MultiRunResult {
  BigInt arrivals_d;
  BigInt arrivals_dbar;
  // Trains that arrived at set[i], in set order.
  std::vector<BigInt> inflows;
  EdgeFlow profile;
  std::uint64_t iterations = 0;
  // Trains waiting outside S right after the start phase.
  BigInt waiting_after_start;
  // Edge traversals made by dispatches (excludes the start phase).
  BigInt loop_traversals;
};

// Throws ValidationError on |weights| != |set|, a set entry that is not a
// proper vertex, a repeated entry, or (kTopological) a cyclic V \ S.
MultiRunResult multi_run(const SwitchGraph& graph, std::span<const std::int32_t> set,
                         std::span<const BigInt> weights,
                         const Scheduler& scheduler = Scheduler::greedy(),
                         const MultiRunHooks& hooks = {});

// (n - l + 2) 2^l - 2: most proper edges one train traverses when every
// vertex is within distance l of where trains stop.
BigInt traversal_bound(std::int32_t n, std::int32_t ell);

// ceil(ln W + n) * (n - k) * traversal_bound(n, l): iteration bound of the
// greedy multi-train run started with W = 1 + sum(w) trains. Natural log.
BigInt greedy_iteration_bound(std::int32_t n, std::int32_t k, std::int32_t ell,
                              const BigInt& total_trains);

}  // namespace arrival

#endif  // ARRIVAL_SIMULATE_H_
