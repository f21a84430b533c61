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

#include "arrival/simulate.h"

#include <charconv>
#include <cmath>
#include <limits>
#include <sstream>

#include "arrival/decompose.h"
#include "arrival/errors.h"
#include "arrival/rng.h"

namespace arrival {

std::string write_trace_csv(std::span<const TraceRow> rows) {
  std::ostringstream out;
  out << "step,vertex,tau,slot,head\n";
  for (const auto& row : rows) {
    out << row.step << ',' << to_token(row.vertex) << ',' << row.tau << ','
        << to_string(row.slot) << ',' << to_token(row.head) << '\n';
  }
  return out.str();
}

std::uint64_t default_step_cap(std::int32_t n) {
  if (n <= 0) return 1;
  if (n >= 58) return std::numeric_limits<std::uint64_t>::max();
  return static_cast<std::uint64_t>(n) * (std::uint64_t{1} << n) + 1;
}

RunResult run_procedure(const SwitchGraph& graph, std::optional<std::uint64_t> step_cap,
                        std::vector<TraceRow>* trace) {
  const auto n = graph.num_vertices();
  const std::uint64_t cap = step_cap.value_or(default_step_cap(n));

  std::vector<std::uint64_t> counts(graph.num_edges(), 0);
  std::vector<bool> current_is_odd(n, false);
  RunResult result;
  result.visits.assign(n, 0);

  counts[SwitchGraph::yard_edge()] = 1;
  if (trace) trace->push_back({0, VertexId::yard(), 1, Slot::kYard, graph.origin()});

  VertexId v = graph.origin();
  std::uint64_t steps = 0;
  while (v.is_proper()) {
    if (steps == cap) {
      throw StepCapExceeded("train did not arrive within " + std::to_string(cap) + " steps");
    }
    const auto i = v.index();
    ++result.visits[i];
    const EdgeId e = current_is_odd[i] ? SwitchGraph::odd_edge(i) : SwitchGraph::even_edge(i);
    current_is_odd[i] = !current_is_odd[i];
    ++counts[e];
    ++steps;
    const auto& edge = graph.edge(e);
    if (trace) trace->push_back({steps, v, 1, edge.slot, edge.head});
    v = edge.head;
  }

  result.destination = v;
  result.proper_traversals = steps;
  result.profile = EdgeFlow(graph.num_edges());
  for (EdgeId e = 0; e < counts.size(); ++e) result.profile[e] = counts[e];
  return result;
}

std::string to_string(const Scheduler& scheduler) {
  switch (scheduler.strategy) {
    case Strategy::kGreedy:
      return "greedy";
    case Strategy::kRoundRobin:
      return "round-robin";
    case Strategy::kTopological:
      return "topological";
    case Strategy::kSingleStep:
      return "single-step";
    case Strategy::kRandom:
      return "random:" + std::to_string(scheduler.seed);
  }
  return "?";
}

Scheduler parse_scheduler(std::string_view text) {
  if (text == "greedy") return Scheduler::greedy();
  if (text == "round-robin") return Scheduler::round_robin();
  if (text == "topological") return Scheduler::topological();
  if (text == "single-step") return Scheduler::single_step();
  if (text == "random") return Scheduler::random(0);
  if (text.starts_with("random:")) {
    const auto digits = text.substr(7);
    std::uint64_t seed = 0;
    auto [ptr, ec] = std::from_chars(digits.data(), digits.data() + digits.size(), seed);
    if (ec == std::errc() && ptr == digits.data() + digits.size() && !digits.empty()) {
      return Scheduler::random(seed);
    }
  }
  throw ValidationError("unknown scheduler '" + std::string(text) + "'");
}

namespace {

class MultiRun {
 public:
  MultiRun(const SwitchGraph& graph, std::span<const std::int32_t> set,
           std::span<const BigInt> weights, const MultiRunHooks& hooks)
      : graph_(graph), set_(set), hooks_(hooks), in_set_(graph.num_vertices(), false) {
    const auto n = graph.num_vertices();
    if (set.size() != weights.size()) {
      throw ValidationError("set has " + std::to_string(set.size()) + " vertices but " +
                            std::to_string(weights.size()) + " weights were given");
    }
    for (auto v : set) {
      if (v < 0 || v >= n) {
        throw ValidationError("set vertex " + std::to_string(v) + " is not proper");
      }
      if (in_set_[v]) throw ValidationError("set vertex " + std::to_string(v) + " listed twice");
      in_set_[v] = true;
    }
    for (const auto& w : weights) {
      if (w < 0) throw ValidationError("weights must be non-negative");
    }
    if (!is_terminating(graph)) throw ValidationError("instance is not terminating");
    for (std::int32_t v = 0; v < n; ++v) {
      if (!in_set_[v]) outside_.push_back(v);
    }

    state_.waiting.assign(static_cast<std::size_t>(n) + 2, 0);
    state_.current_is_odd.assign(n, false);
    state_.traversals = EdgeFlow::zeros(graph);

    // Start phase.
    state_.traversals[SwitchGraph::yard_edge()] = 1;
    state_.waiting[graph.node_of(graph.origin())] += 1;
    if (hooks_.trace) {
      hooks_.trace->push_back({0, VertexId::yard(), 1, Slot::kYard, graph.origin()});
    }
    for (std::size_t i = 0; i < set.size(); ++i) {
      const auto v = set[i];
      const BigInt up = (weights[i] + 1) / 2;
      const BigInt down = weights[i] / 2;
      move(SwitchGraph::even_edge(v), up, weights[i], 0);
      move(SwitchGraph::odd_edge(v), down, weights[i], 0);
    }
    for (auto v : outside_) result_.waiting_after_start += state_.waiting[v];
    notify();
  }

  bool has_waiting(std::int32_t v) const { return state_.waiting[v] > 0; }
  const BigInt& waiting(std::int32_t v) const { return state_.waiting[v]; }
  std::span<const std::int32_t> outside() const { return outside_; }
  bool in_set(std::int32_t v) const { return in_set_[v]; }

  // Returns the head of the current-successor edge used.
  VertexId dispatch(std::int32_t v, const BigInt& tau) {
    const std::uint64_t step = ++state_.iteration;
    state_.waiting[v] -= tau;
    const EdgeId current = state_.current_edge(v);
    const EdgeId next = state_.next_edge(v);
    move(current, (tau + 1) / 2, tau, step);
    move(next, tau / 2, tau, step);
    if (boost::multiprecision::bit_test(tau, 0)) {
      state_.current_is_odd[v] = !state_.current_is_odd[v];
    }
    result_.loop_traversals += tau;
    notify();
    return graph_.edge(current).head;
  }

  MultiRunResult finish() {
    for (auto v : outside_) {
      if (state_.waiting[v] != 0) throw CertificateError("multi-run stopped with waiting trains");
    }
    const auto n = static_cast<std::size_t>(graph_.num_vertices());
    result_.arrivals_d = state_.waiting[n];
    result_.arrivals_dbar = state_.waiting[n + 1];
    for (auto v : set_) result_.inflows.push_back(state_.waiting[v]);
    result_.iterations = state_.iteration;
    result_.profile = std::move(state_.traversals);
    return std::move(result_);
  }

 private:
  void move(EdgeId e, const BigInt& count, const BigInt& tau, std::uint64_t step) {
    if (count.is_zero()) return;
    const auto& edge = graph_.edge(e);
    state_.traversals[e] += count;
    state_.waiting[graph_.node_of(edge.head)] += count;
    if (hooks_.trace) hooks_.trace->push_back({step, edge.tail, tau, edge.slot, edge.head});
  }

  void notify() {
    if (hooks_.on_step) hooks_.on_step(state_);
  }

  const SwitchGraph& graph_;
  std::span<const std::int32_t> set_;
  const MultiRunHooks& hooks_;
  std::vector<bool> in_set_;
  std::vector<std::int32_t> outside_;
  MultiRunState state_;
  MultiRunResult result_;
};

void run_greedy(MultiRun& run) {
  while (true) {
    std::int32_t best = -1;
    for (auto v : run.outside()) {
      if (run.has_waiting(v) && (best < 0 || run.waiting(v) > run.waiting(best))) best = v;
    }
    if (best < 0) return;
    const BigInt tau = run.waiting(best);
    run.dispatch(best, tau);
  }
}

void run_round_robin(MultiRun& run) {
  const auto outside = run.outside();
  std::size_t cursor = 0;
  while (true) {
    std::optional<std::size_t> found;
    for (std::size_t step = 0; step < outside.size(); ++step) {
      const auto pos = (cursor + step) % outside.size();
      if (run.has_waiting(outside[pos])) {
        found = pos;
        break;
      }
    }
    if (!found) return;
    const auto v = outside[*found];
    const BigInt tau = run.waiting(v);
    run.dispatch(v, tau);
    cursor = *found + 1;
  }
}

void run_topological(MultiRun& run, const SwitchGraph& graph,
                     std::span<const std::int32_t> set) {
  const auto order = topological_order_outside(graph, set);
  if (!order) {
    throw ValidationError("topological scheduler needs an acyclic subgraph outside the set");
  }
  for (auto v : *order) {
    if (!run.has_waiting(v)) continue;
    const BigInt tau = run.waiting(v);
    run.dispatch(v, tau);
  }
}

void run_single_step(MultiRun& run) {
  const BigInt one = 1;
  std::int32_t follow = -1;
  while (true) {
    std::int32_t v = -1;
    if (follow >= 0 && !run.in_set(follow) && run.has_waiting(follow)) {
      v = follow;
    } else {
      for (auto u : run.outside()) {
        if (run.has_waiting(u)) {
          v = u;
          break;
        }
      }
    }
    if (v < 0) return;
    const auto head = run.dispatch(v, one);
    follow = head.is_proper() ? head.index() : -1;
  }
}

void run_random(MultiRun& run, std::uint64_t seed) {
  Xorshift64Star rng(seed);
  std::vector<std::int32_t> candidates;
  const BigInt word_max = std::numeric_limits<std::uint64_t>::max();
  while (true) {
    candidates.clear();
    for (auto v : run.outside()) {
      if (run.has_waiting(v)) candidates.push_back(v);
    }
    if (candidates.empty()) return;
    const auto v = candidates[rng.below(candidates.size())];
    const BigInt& waiting = run.waiting(v);
    // Beyond 64 bits tau is drawn from [1, 2^64 - 1].
    const auto bound = waiting > word_max ? std::numeric_limits<std::uint64_t>::max()
                                          : waiting.convert_to<std::uint64_t>();
    const BigInt tau = BigInt(rng.below(bound)) + 1;
    run.dispatch(v, tau);
  }
}

}  // namespace

MultiRunResult multi_run(const SwitchGraph& graph, std::span<const std::int32_t> set,
                         std::span<const BigInt> weights, const Scheduler& scheduler,
                         const MultiRunHooks& hooks) {
  MultiRun run(graph, set, weights, hooks);
  switch (scheduler.strategy) {
    case Strategy::kGreedy:
      run_greedy(run);
      break;
    case Strategy::kRoundRobin:
      run_round_robin(run);
      break;
    case Strategy::kTopological:
      run_topological(run, graph, set);
      break;
    case Strategy::kSingleStep:
      run_single_step(run);
      break;
    case Strategy::kRandom:
      run_random(run, scheduler.seed);
      break;
  }
  return run.finish();
}

BigInt traversal_bound(std::int32_t n, std::int32_t ell) {
  if (ell < 0 || ell > n) throw ValidationError("layer depth out of range");
  return BigInt(n - ell + 2) * pow2(static_cast<unsigned>(ell)) - 2;
}

namespace {

double natural_log(const BigInt& value) {
  const unsigned bits = bit_length(value);
  if (bits <= 64) return std::log(value.convert_to<double>());
  const unsigned shift = bits - 64;
  const BigInt top = value >> shift;
  return std::log(top.convert_to<double>()) + shift * std::log(2.0);
}

}  // namespace

BigInt greedy_iteration_bound(std::int32_t n, std::int32_t k, std::int32_t ell,
                              const BigInt& total_trains) {
  if (total_trains < 1) throw ValidationError("total train count must be at least 1");
  if (k < 0 || k > n) throw ValidationError("set size out of range");
  const double log_w = natural_log(total_trains);
  const BigInt ceil_log = static_cast<std::uint64_t>(std::ceil(log_w));
  return (ceil_log + n) * (n - k) * traversal_bound(n, ell);
}

}  // namespace arrival
