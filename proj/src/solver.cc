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

#include <chrono>
#include <future>

#include "arrival/errors.h"
#include "arrival/simulate.h"

namespace arrival {

std::string to_string(Method method) {
  switch (method) {
    case Method::kSimulation:
      return "sim";
    case Method::kSubexponential:
      return "subexp";
    case Method::kFvs:
      return "fvs";
  }
  return "?";
}

Method parse_method(std::string_view text) {
  if (text == "sim") return Method::kSimulation;
  if (text == "subexp") return Method::kSubexponential;
  if (text == "fvs") return Method::kFvs;
  throw ValidationError("unknown method '" + std::string(text) + "'");
}

BigInt tarski_evaluation_bound(TarskiMethod method, std::size_t k, const BigInt& cap) {
  switch (method) {
    case TarskiMethod::kRecursiveBinary:
      return 4 * recursive_binary_probe_bound(k, cap);
    case TarskiMethod::kKleene:
      return BigInt(k) * cap + 1;
    case TarskiMethod::kExhaustive:
      return boost::multiprecision::pow(BigInt(cap + 1), static_cast<unsigned>(k));
  }
  return 0;
}

namespace {

using Clock = std::chrono::steady_clock;

double elapsed_ms(Clock::time_point start) {
  return std::chrono::duration<double, std::milli>(Clock::now() - start).count();
}

// Proper edges in a profile: everything but the yard edge.
BigInt proper_total(const EdgeFlow& profile) { return flow_total(profile) - 1; }

void require_terminating(const SwitchGraph& graph) {
  if (!is_terminating(graph)) throw ValidationError("instance is not terminating");
}

// Shared by the two fixed-point routes. `per_evaluation_bound` maps the
// total train count W to the iteration bound for one multi-train run.
template <typename IterationBound>
Decision decide_with_set(const SwitchGraph& graph, Method method, std::vector<std::int32_t> set,
                         Scheduler scheduler, TarskiMethod tarski,
                         const EvaluationObserver& observer,
                         IterationBound per_evaluation_bound) {
  const auto n = graph.num_vertices();
  const int ell = radius_to_set(graph, set);
  const BigInt per_train = traversal_bound(n, ell);

  Decision decision;
  decision.method = method;
  decision.set = set;
  decision.tarski = tarski;
  auto& stats = decision.stats;
  stats.set_size = set.size();
  stats.ell = ell;

  const auto account = [&](const LatticePoint& w, const MultiRunResult& run) {
    stats.edge_traversals += proper_total(run.profile);
    stats.loop_iterations += run.iterations;
    stats.max_iterations_per_evaluation =
        std::max(stats.max_iterations_per_evaluation, run.iterations);

    BigInt trains = 1;
    for (const auto& x : w) trains += x;
    const BigInt iteration_bound = per_evaluation_bound(trains);
    if (iteration_bound > stats.iteration_bound) stats.iteration_bound = iteration_bound;
    if (BigInt(run.iterations) > iteration_bound) stats.iteration_bound_ok = false;

    const BigInt traversal_limit = run.waiting_after_start * per_train;
    if (traversal_limit > stats.traversal_bound) stats.traversal_bound = traversal_limit;
    if (run.loop_traversals > traversal_limit) stats.traversal_bound_ok = false;
    if (observer) observer(w, run);
  };

  const auto problem = build_capped_function(graph, set, scheduler, account);
  decision.fixed_point = find_fixed_point(problem, tarski);
  stats.d_evaluations = problem.evaluations();
  stats.evaluation_bound = tarski_evaluation_bound(tarski, set.size(), problem.cap());
  stats.evaluation_bound_ok = BigInt(stats.d_evaluations) <= stats.evaluation_bound;

  auto certificate = fixed_point_to_switching_flow(graph, set, decision.fixed_point, scheduler);
  account(decision.fixed_point, certificate.run);
  decision.destination = certificate.destination;
  decision.certificate = std::move(certificate.flow);
  return decision;
}

}  // namespace

Decision decide_by_simulation(const SwitchGraph& graph) {
  const auto start = Clock::now();
  const auto layers = layer_decomposition(graph);
  auto run = run_procedure(graph);

  const auto verdict = check_switching_flow(graph, run.profile);
  if (!verdict.valid() || *verdict.destination() != run.destination) {
    throw CertificateError("run profile failed verification: " + to_string(verdict));
  }

  Decision decision;
  decision.method = Method::kSimulation;
  decision.destination = run.destination;
  auto& stats = decision.stats;
  stats.edge_traversals = run.proper_traversals;
  stats.loop_iterations = run.proper_traversals;
  stats.max_iterations_per_evaluation = run.proper_traversals;
  stats.ell = layers.ell;
  stats.traversal_bound = traversal_bound(graph.num_vertices(), layers.ell);
  stats.iteration_bound = stats.traversal_bound;
  stats.traversal_bound_ok = stats.edge_traversals <= stats.traversal_bound;
  stats.iteration_bound_ok = stats.traversal_bound_ok;
  decision.certificate = std::move(run.profile);
  stats.wall_time_ms = elapsed_ms(start);
  return decision;
}

Decision decide_subexponential(const SwitchGraph& graph, const SubexpOptions& options) {
  const auto start = Clock::now();
  require_terminating(graph);
  const auto n = graph.num_vertices();
  const Rational phi = options.phi.value_or(default_phi(n));
  const auto phi_set = compute_phi_set(graph, phi);
  const auto k = static_cast<std::int32_t>(phi_set.vertices.size());
  const int ell = phi_set.certified_radius;

  auto decision = decide_with_set(
      graph, Method::kSubexponential, phi_set.vertices, Scheduler::greedy(), options.tarski,
      options.observer,
      [&](const BigInt& trains) { return greedy_iteration_bound(n, k, ell, trains); });
  decision.stats.phi = phi;
  decision.stats.wall_time_ms = elapsed_ms(start);
  return decision;
}

Decision decide_fvs(const SwitchGraph& graph, const FvsOptions& options) {
  const auto start = Clock::now();
  require_terminating(graph);
  const auto fvs = feedback_vertex_set(graph, options.k_max);
  if (!fvs) {
    throw FvsRefusal("no feedback vertex set with at most " + std::to_string(options.k_max) +
                     " vertices");
  }
  const BigInt sweep = graph.num_vertices() - static_cast<std::int32_t>(fvs->vertices.size());
  auto decision =
      decide_with_set(graph, Method::kFvs, fvs->vertices, Scheduler::topological(),
                      options.tarski, options.observer, [&](const BigInt&) { return sweep; });
  decision.stats.wall_time_ms = elapsed_ms(start);
  return decision;
}

ConsolidatedReport decide_all(const SwitchGraph& graph, const AllOptions& options) {
  require_terminating(graph);
  const auto fvs_outcome = [&]() {
    MethodOutcome outcome{Method::kFvs, std::nullopt, {}};
    try {
      outcome.decision = decide_fvs(graph, options.fvs);
    } catch (const FvsRefusal& refusal) {
      outcome.refusal = refusal.what();
    }
    return outcome;
  };
  const auto sim_outcome = [&]() {
    return MethodOutcome{Method::kSimulation, decide_by_simulation(graph), {}};
  };
  const auto subexp_outcome = [&]() {
    return MethodOutcome{Method::kSubexponential, decide_subexponential(graph, options.subexp),
                         {}};
  };

  ConsolidatedReport report;
  if (options.concurrent) {
    auto sim = std::async(std::launch::async, sim_outcome);
    auto subexp = std::async(std::launch::async, subexp_outcome);
    auto fvs = std::async(std::launch::async, fvs_outcome);
    report.outcomes.push_back(sim.get());
    report.outcomes.push_back(subexp.get());
    report.outcomes.push_back(fvs.get());
  } else {
    report.outcomes.push_back(sim_outcome());
    report.outcomes.push_back(subexp_outcome());
    report.outcomes.push_back(fvs_outcome());
  }

  report.destination = report.outcomes.front().decision->destination;
  bool agree = true;
  for (const auto& outcome : report.outcomes) {
    if (outcome.decision && outcome.decision->destination != report.destination) agree = false;
  }
  if (!agree) {
    std::string message = "deciders disagree";
    for (const auto& outcome : report.outcomes) {
      if (!outcome.decision) continue;
      message += "\n== " + to_string(outcome.method) + " -> " +
                 to_token(outcome.decision->destination) + "\n" +
                 write_flow_csv(graph, outcome.decision->certificate);
    }
    throw DisagreementError(message);
  }
  return report;
}

}  // namespace arrival
