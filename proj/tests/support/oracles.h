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

// Reference implementations used only by tests. They work on plain integer
// arrays and share no code with the library beyond the instance struct, so
// agreement between the two is evidence rather than tautology.

#ifndef ARRIVAL_TESTS_SUPPORT_ORACLES_H_
#define ARRIVAL_TESTS_SUPPORT_ORACLES_H_

#include <cstdint>
#include <functional>
#include <string>
#include <vector>

#include "arrival/core.h"
#include "arrival/flows.h"

namespace arrival::oracle {

// Targets: 0..n-1 proper, kD0 = d, kD1 = dbar.
constexpr int kD0 = -2;
constexpr int kD1 = -3;

struct Plain {
  int n = 0;
  int origin = 0;
  std::vector<int> even;
  std::vector<int> odd;
};

Plain plain(const ArrivalInstance& instance);

struct PlainFlow {
  std::uint64_t yard = 0;
  std::vector<std::uint64_t> even;
  std::vector<std::uint64_t> odd;

  friend bool operator==(const PlainFlow&, const PlainFlow&) = default;
};

// Reads a library flow through the graph's (tail, slot) labels.
PlainFlow plain_flow(const SwitchGraph& graph, const EdgeFlow& x);

// Componentwise <=.
bool leq(const PlainFlow& a, const PlainFlow& b);

struct Run {
  int destination = kD0;
  PlainFlow profile;
  std::vector<std::uint64_t> visits;
};

Run run(const Plain& a);

struct MultiRun {
  PlainFlow profile;
  std::uint64_t to_d0 = 0;
  std::uint64_t to_d1 = 0;
  std::vector<std::uint64_t> inflows;
};

// Moves one train at a time to its stop, in FIFO order.
MultiRun multi_run(const Plain& a, const std::vector<int>& set,
                   const std::vector<std::uint64_t>& weights);

// Shortest distance from each proper vertex to set u {d, dbar} by repeated
// relaxation; -1 when unreachable.
std::vector<int> distances(const Plain& a, const std::vector<int>& set = {});

std::uint64_t traversal_bound(int n, int ell);

// ceil(ln W + n) (n - k) ((n - ell + 2) 2^ell - 2) in long double.
std::uint64_t greedy_bound(int n, int k, int ell, std::uint64_t total_trains);

// Is the subgraph on proper vertices not in `removed` acyclic (self-loops
// count as cycles)?
bool acyclic(const Plain& a, const std::vector<bool>& removed);

// Lexicographically first minimum feedback vertex set by subset enumeration.
std::vector<int> min_fvs(const Plain& a);

// Calls `visit` on every flow with slot values <= max_slot that satisfies
// unit yard outflow, switching behavior everywhere, conservation outside
// `set`, and outflow weights[i] at set[i]. With an empty set these are the
// switching flows.
void enumerate_flows(const Plain& a, int max_slot, const std::vector<int>& set,
                     const std::vector<std::uint64_t>& weights,
                     const std::function<void(const PlainFlow&)>& visit);

// kD0 or kD1 for a switching flow: the destination with inflow 1.
int flow_destination(const Plain& a, const PlainFlow& x);

// Builders. Tokens are vertex numbers, "D0" or "D1".
ArrivalInstance make_instance(int origin, const std::vector<std::string>& even,
                              const std::vector<std::string>& odd);
// a = 0 -> (b, dbar), b = 1 -> (a, d), origin a.
ArrivalInstance i2();

// n vertices containing `cycles` vertex-disjoint planted cycles. Every other
// edge goes down a hidden order, so the minimum FVS has exactly `cycles`
// vertices. Needs n >= 2 * cycles.
ArrivalInstance planted_cycles(int cycles, int n, std::uint64_t seed);

}  // namespace arrival::oracle

#endif  // ARRIVAL_TESTS_SUPPORT_ORACLES_H_
