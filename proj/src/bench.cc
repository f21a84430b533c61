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

#include "arrival/bench.h"

#include <algorithm>
#include <atomic>
#include <exception>
#include <sstream>
#include <thread>

#include "arrival/errors.h"
#include "arrival/generate.h"

namespace arrival {

const char* const kBenchHeader =
    "instance,method,status,n,ell,set_size,destination,traversals,iterations,d_evals,"
    "traversal_bound,iteration_bound,evaluation_bound,bounds_ok,agree,wall_ms";

std::vector<BenchItem> default_corpus() {
  std::vector<BenchItem> corpus;
  for (const auto family : {Family::kRandomTerminating, Family::kLayeredChain,
                            Family::kLongRunCounter, Family::kTwoCycleGrid}) {
    for (std::int32_t n = 1; n <= 12; ++n) {
      corpus.push_back({to_string(family) + "-" + std::to_string(n),
                        generate({family, n, 1})});
    }
  }
  return corpus;
}

namespace {

std::string row(const std::string& name, Method method, const Decision* decision,
                const SwitchGraph& graph, VertexId reference) {
  std::ostringstream out;
  out << name << ',' << to_string(method) << ',';
  if (!decision) {
    out << "refused," << graph.num_vertices() << ",,,,,,,,,,,,";
    return out.str();
  }
  const auto& s = decision->stats;
  out << "ok," << graph.num_vertices() << ',' << s.ell << ',' << s.set_size << ','
      << to_token(decision->destination) << ',' << s.edge_traversals << ','
      << s.loop_iterations << ',' << s.d_evaluations << ',' << s.traversal_bound << ','
      << s.iteration_bound << ',' << s.evaluation_bound << ',' << (s.bounds_ok() ? 1 : 0)
      << ',' << (decision->destination == reference ? 1 : 0) << ',' << s.wall_time_ms;
  return out.str();
}

std::string bench_one(const BenchItem& item, const BenchOptions& options) {
  const SwitchGraph graph(item.instance);
  const auto reference = decide_by_simulation(graph);
  std::string lines;
  for (const auto method : options.methods) {
    std::optional<Decision> decision;
    switch (method) {
      case Method::kSimulation:
        decision = reference;
        break;
      case Method::kSubexponential:
        decision = decide_subexponential(graph, options.subexp);
        break;
      case Method::kFvs:
        try {
          decision = decide_fvs(graph, options.fvs);
        } catch (const FvsRefusal&) {
        }
        break;
    }
    lines += row(item.name, method, decision ? &*decision : nullptr, graph,
                 reference.destination);
    lines += '\n';
  }
  return lines;
}

}  // namespace

void write_bench_csv(std::ostream& out, const std::vector<BenchItem>& corpus,
                     const BenchOptions& options) {
  for (const auto& item : corpus) {
    if (!is_terminating(item.instance)) {
      throw ValidationError("bench instance '" + item.name + "' is not terminating");
    }
  }
  std::vector<std::string> rows(corpus.size());
  std::vector<std::exception_ptr> errors(corpus.size());
  std::atomic<std::size_t> next = 0;
  const auto worker = [&]() {
    for (std::size_t i = next++; i < corpus.size(); i = next++) {
      try {
        rows[i] = bench_one(corpus[i], options);
      } catch (...) {
        errors[i] = std::current_exception();
      }
    }
  };
  const auto threads = std::max<std::size_t>(1, std::min(options.threads, corpus.size()));
  if (threads == 1) {
    worker();
  } else {
    std::vector<std::jthread> pool;
    for (std::size_t t = 0; t < threads; ++t) pool.emplace_back(worker);
  }
  for (const auto& error : errors) {
    if (error) std::rethrow_exception(error);
  }
  out << kBenchHeader << '\n';
  for (const auto& r : rows) out << r;
}

}  // namespace arrival
