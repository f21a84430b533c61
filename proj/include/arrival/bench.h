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

// Benchmark driver producing one CSV row per (instance, method).
//
// Columns, in order:
//   instance          corpus label
//   method            sim | subexp | fvs
//   status            ok | refused
//   n, ell, set_size  instance size, radius to S u {d, dbar}, |S|
//   destination       D0 | D1 (empty when refused)
//   traversals        proper-edge traversals, summed over all runs
//   iterations        dispatch iterations, summed over all runs
//   d_evals           evaluations of the capped map (0 for sim)
//   traversal_bound, iteration_bound, evaluation_bound
//   bounds_ok         1 when every measured count is within its bound
//   agree             1 when this row's destination matches simulation
//   wall_ms           wall time of the decider

#ifndef ARRIVAL_BENCH_H_
#define ARRIVAL_BENCH_H_

#include <cstddef>
#include <ostream>
#include <string>
#include <vector>

#include "arrival/core.h"
#include "arrival/solver.h"

namespace arrival {

struct BenchItem {
  std::string name;
  ArrivalInstance instance;
};

// Every generator family at n = 1..12 (seed 1 for the random family).
std::vector<BenchItem> default_corpus();

struct BenchOptions {
  std::vector<Method> methods = {Method::kSimulation, Method::kSubexponential, Method::kFvs};
  SubexpOptions subexp;
  FvsOptions fvs;
  // Worker threads; rows keep corpus order regardless.
  std::size_t threads = 1;
};

extern const char* const kBenchHeader;

// Writes the header and all rows. Non-terminating instances throw
// ValidationError before any row is written.
void write_bench_csv(std::ostream& out, const std::vector<BenchItem>& corpus,
                     const BenchOptions& options = {});

}  // namespace arrival

#endif  // ARRIVAL_BENCH_H_
