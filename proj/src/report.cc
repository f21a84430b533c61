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

#include "arrival/report.h"

#include <limits>

#include "json.hpp"

namespace arrival {

namespace {

using nlohmann::json;

json big(const BigInt& x) {
  if (x >= 0 && x <= std::numeric_limits<std::uint64_t>::max()) {
    return static_cast<std::uint64_t>(x);
  }
  return x.str();
}

json big_list(std::span<const BigInt> xs) {
  json out = json::array();
  for (const auto& x : xs) out.push_back(big(x));
  return out;
}

json stats_json(const DecisionStats& s) {
  json out = {
      {"edge_traversals", big(s.edge_traversals)},
      {"loop_iterations", s.loop_iterations},
      {"max_iterations_per_evaluation", s.max_iterations_per_evaluation},
      {"d_evaluations", s.d_evaluations},
      {"set_size", s.set_size},
      {"ell", s.ell},
      {"wall_time_ms", s.wall_time_ms},
      {"bounds",
       {{"traversal", big(s.traversal_bound)},
        {"iteration", big(s.iteration_bound)},
        {"evaluation", big(s.evaluation_bound)}}},
      {"bounds_ok",
       {{"traversal", s.traversal_bound_ok},
        {"iteration", s.iteration_bound_ok},
        {"evaluation", s.evaluation_bound_ok}}},
  };
  out["phi"] = s.phi ? json(to_string(*s.phi)) : json(nullptr);
  return out;
}

json decision_json(const Decision& d) {
  json out = {
      {"method", to_string(d.method)},
      {"destination", to_token(d.destination)},
      {"set", d.set},
      {"fixed_point", big_list(d.fixed_point)},
      {"stats", stats_json(d.stats)},
  };
  if (d.method != Method::kSimulation) out["tarski_method"] = to_string(d.tarski);
  return out;
}

}  // namespace

std::string to_json(const Decision& decision) { return decision_json(decision).dump(); }

std::string to_json(const MethodOutcome& outcome) {
  if (outcome.decision) return to_json(*outcome.decision);
  return json{{"method", to_string(outcome.method)},
              {"destination", nullptr},
              {"refused", outcome.refusal}}
      .dump();
}

std::string to_json(const RunResult& run) {
  return json{{"destination", to_token(run.destination)},
              {"proper_traversals", run.proper_traversals},
              {"visits", run.visits}}
      .dump();
}

std::string to_json(const MultiRunResult& run, std::span<const std::int32_t> set) {
  return json{{"set", std::vector<std::int32_t>(set.begin(), set.end())},
              {"inflows", big_list(run.inflows)},
              {"arrivals_d", big(run.arrivals_d)},
              {"arrivals_dbar", big(run.arrivals_dbar)},
              {"iterations", run.iterations},
              {"loop_traversals", big(run.loop_traversals)},
              {"waiting_after_start", big(run.waiting_after_start)}}
      .dump();
}

std::string to_json(const PhiSet& phi_set) {
  return json{{"set", phi_set.vertices},
              {"phi", to_string(phi_set.phi)},
              {"radius", phi_set.certified_radius},
              {"size_bound", phi_set.size_bound},
              {"radius_bound", phi_set.radius_bound}}
      .dump();
}

std::string to_json(const FeedbackVertexSet& fvs) {
  return json{{"set", fvs.vertices}, {"topological_order", fvs.topological_order}}.dump();
}

}  // namespace arrival
