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

// Edge flows over the switch graph and certificate checks.
//
// A switching flow x : E -> N0 emits one unit at Y, is conserved at every
// proper vertex, and splits each vertex's outflow with even - odd in {0, 1}.
// A candidate switching flow relaxes conservation on a set S and instead
// prescribes the outflow at each S vertex.

#ifndef ARRIVAL_FLOWS_H_
#define ARRIVAL_FLOWS_H_

#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "arrival/bigint.h"
#include "arrival/core.h"

namespace arrival {

// Edge-slot indexed non-negative integer labels.
class EdgeFlow {
 public:
  EdgeFlow() = default;
  explicit EdgeFlow(std::size_t num_slots) : values_(num_slots) {}
  explicit EdgeFlow(std::vector<BigInt> values) : values_(std::move(values)) {}

  static EdgeFlow zeros(const SwitchGraph& graph) { return EdgeFlow(graph.num_edges()); }

  std::size_t size() const { return values_.size(); }
  BigInt& operator[](EdgeId e) { return values_[e]; }
  const BigInt& operator[](EdgeId e) const { return values_[e]; }
  std::span<const BigInt> values() const { return values_; }

  friend bool operator==(const EdgeFlow&, const EdgeFlow&) = default;

 private:
  std::vector<BigInt> values_;
};

BigInt outflow(const SwitchGraph& graph, const EdgeFlow& x, VertexId v);
BigInt inflow(const SwitchGraph& graph, const EdgeFlow& x, VertexId v);

// Componentwise x <= y. Throws ValidationError on a slot-count mismatch.
bool flow_leq(const EdgeFlow& x, const EdgeFlow& y);
BigInt flow_total(const EdgeFlow& x);

enum class VerdictKind { kValidToD, kValidToDbar, kValidCandidate, kInvalid };

struct FlowVerdict {
  VerdictKind kind = VerdictKind::kInvalid;
  // First violated constraint, empty when valid.
  std::string reason;
  std::optional<VertexId> vertex;

  bool valid() const { return kind != VerdictKind::kInvalid; }
  // d or dbar for a valid switching flow.
  std::optional<VertexId> destination() const;

  static FlowVerdict invalid(std::string reason, std::optional<VertexId> at = std::nullopt) {
    return {VerdictKind::kInvalid, std::move(reason), at};
  }
};

std::string to_string(const FlowVerdict& verdict);

FlowVerdict check_switching_flow(const SwitchGraph& graph, const EdgeFlow& x);

// |outflows| must equal |set| (ValidationError otherwise). With an empty set
// this checks the switching-flow conditions without labeling a destination.
FlowVerdict check_candidate_flow(const SwitchGraph& graph, std::span<const std::int32_t> set,
                                 std::span<const BigInt> outflows, const EdgeFlow& x);

// CSV with header `tail,slot,head,count`, one row per edge slot in slot order.
std::string write_flow_csv(const SwitchGraph& graph, const EdgeFlow& x);

// Accepts rows in any order. Missing slots read as 0; duplicate slots, unknown
// slots and heads disagreeing with the graph are ParseErrors.
EdgeFlow read_flow_csv(const SwitchGraph& graph, std::string_view text);

}  // namespace arrival

#endif  // ARRIVAL_FLOWS_H_
