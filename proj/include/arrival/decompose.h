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

// Structural decompositions used to pick the set S: distance layers, the
// ball-growing phi-set, and minimum feedback vertex sets.

#ifndef ARRIVAL_DECOMPOSE_H_
#define ARRIVAL_DECOMPOSE_H_

#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "arrival/core.h"

namespace arrival {

struct LayerDecomposition {
  // layers[0] = {d, dbar}; layers[i] = proper vertices at distance i.
  std::vector<std::vector<VertexId>> layers;
  // Indexed by graph node (proper v -> v, d -> n, dbar -> n+1).
  std::vector<int> dist;
  // Largest distance of a proper vertex.
  int ell = 0;

  int distance(VertexId v) const;
};

// Throws ValidationError for non-terminating instances.
LayerDecomposition layer_decomposition(const SwitchGraph& graph);

// Distance from each proper vertex to S u {d, dbar} (0 on S, -1 if none is
// reachable), indexed by vertex.
std::vector<int> distances_to_set(const SwitchGraph& graph, std::span<const std::int32_t> set);

// Largest finite entry of `distances_to_set`, or -1 if some vertex cannot
// reach S u {d, dbar}.
int radius_to_set(const SwitchGraph& graph, std::span<const std::int32_t> set);

// Exact positive rational, kept reduced with a positive denominator.
struct Rational {
  std::int64_t num = 1;
  std::int64_t den = 2;

  static Rational make(std::int64_t num, std::int64_t den);
  // "3/7", "0.25" or "1".
  static Rational parse(std::string_view text);

  double value() const { return static_cast<double>(num) / static_cast<double>(den); }

  friend bool operator==(const Rational&, const Rational&) = default;
};

std::string to_string(const Rational& r);

// sqrt(3 / (2n)) rounded down to six decimals, clamped below 1.
Rational default_phi(std::int32_t n);

struct PhiSet {
  std::vector<std::int32_t> vertices;  // ascending
  Rational phi;
  // Largest distance from a proper vertex to S u {d, dbar}, recomputed by BFS.
  int certified_radius = 0;
  // phi * (n + 2) and log2(n + 2) / phi.
  double size_bound = 0;
  double radius_bound = 0;
};

// Union of layers chosen by the ball-growing sweep: keep an accumulator U
// seeded with L0; layer L_i joins S (and U restarts) when |L_i| < phi |U|.
// Requires 0 < phi < 1 and a terminating instance.
PhiSet compute_phi_set(const SwitchGraph& graph, Rational phi);

// Topological order (lowest index first among ready vertices) of the
// subgraph induced on proper vertices outside `set`, or nullopt if it has a
// cycle.
std::optional<std::vector<std::int32_t>> topological_order_outside(
    const SwitchGraph& graph, std::span<const std::int32_t> set);

struct FeedbackVertexSet {
  std::vector<std::int32_t> vertices;  // ascending
  // Witness that V \ vertices is acyclic.
  std::vector<std::int32_t> topological_order;
};

// A minimum feedback vertex set of the subgraph induced on the proper
// vertices, or nullopt if every such set has more than `k_max` vertices.
// Among minimum sets the lexicographically smallest is returned.
std::optional<FeedbackVertexSet> feedback_vertex_set(const SwitchGraph& graph, int k_max);

}  // namespace arrival

#endif  // ARRIVAL_DECOMPOSE_H_
