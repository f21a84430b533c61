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

// Instance data model and the switch graph G(A).
//
// An instance has proper vertices 0..n-1, an origin among them, and two
// successor maps (even, odd) into the proper vertices or one of the two
// destinations. The switch graph adds a yard vertex Y with the single edge
// (Y, origin). Every edge is identified by (tail, slot), so the even and odd
// edge of a vertex stay distinct even when their heads coincide.

#ifndef ARRIVAL_CORE_H_
#define ARRIVAL_CORE_H_

#include <compare>
#include <cstddef>
#include <cstdint>
#include <iosfwd>
#include <span>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

namespace arrival {

class VertexId {
 public:
  static constexpr VertexId proper(std::int32_t index) { return VertexId(index); }
  static constexpr VertexId yard() { return VertexId(kYard); }
  static constexpr VertexId dest_d() { return VertexId(kDestD); }
  static constexpr VertexId dest_dbar() { return VertexId(kDestDbar); }

  constexpr bool is_proper() const { return value_ >= 0; }
  constexpr bool is_yard() const { return value_ == kYard; }
  constexpr bool is_destination() const {
    return value_ == kDestD || value_ == kDestDbar;
  }
  // Only meaningful for proper vertices.
  constexpr std::int32_t index() const { return value_; }

  constexpr auto operator<=>(const VertexId&) const = default;

 private:
  static constexpr std::int32_t kYard = -1;
  static constexpr std::int32_t kDestD = -2;
  static constexpr std::int32_t kDestDbar = -3;

  constexpr explicit VertexId(std::int32_t value) : value_(value) {}

  std::int32_t value_;
};

// "Y", "D0", "D1" or the decimal index.
std::string to_token(VertexId v);
std::ostream& operator<<(std::ostream& os, VertexId v);

enum class Slot : std::uint8_t { kYard, kEven, kOdd };

std::string_view to_string(Slot slot);

using EdgeId = std::size_t;

struct Edge {
  VertexId tail;
  Slot slot;
  VertexId head;
};

// The 6-tuple (V, o, d, dbar, s_even, s_odd). The vertex count is the size of
// the successor maps. Plain value type; `validate` checks the invariants.
struct ArrivalInstance {
  VertexId origin = VertexId::proper(0);
  std::vector<VertexId> succ_even;
  std::vector<VertexId> succ_odd;

  std::int32_t num_vertices() const {
    return static_cast<std::int32_t>(succ_even.size());
  }

  friend bool operator==(const ArrivalInstance&, const ArrivalInstance&) = default;
};

// Throws ValidationError naming the first broken invariant.
void validate(const ArrivalInstance& instance);

// Immutable switch graph. Node indices used by per-node arrays:
// proper vertex v -> v, d -> n, dbar -> n+1, Y -> n+2.
class SwitchGraph {
 public:
  // Validates `instance` first.
  explicit SwitchGraph(ArrivalInstance instance);

  const ArrivalInstance& instance() const { return instance_; }
  std::int32_t num_vertices() const { return n_; }
  VertexId origin() const { return instance_.origin; }

  std::size_t num_nodes() const { return static_cast<std::size_t>(n_) + 3; }
  std::size_t node_of(VertexId v) const;
  VertexId vertex_at(std::size_t node) const;

  // Always 2n + 1.
  std::size_t num_edges() const { return edges_.size(); }
  const Edge& edge(EdgeId id) const { return edges_[id]; }
  std::span<const Edge> edges() const { return edges_; }

  static constexpr EdgeId yard_edge() { return 0; }
  static constexpr EdgeId even_edge(std::int32_t v) {
    return 1 + 2 * static_cast<EdgeId>(v);
  }
  static constexpr EdgeId odd_edge(std::int32_t v) {
    return 2 + 2 * static_cast<EdgeId>(v);
  }

  VertexId succ_even(std::int32_t v) const { return instance_.succ_even[v]; }
  VertexId succ_odd(std::int32_t v) const { return instance_.succ_odd[v]; }

  std::span<const EdgeId> out_edges(VertexId v) const;
  std::span<const EdgeId> in_edges(VertexId v) const;

  // Multi-source BFS along reversed edges. Entry i is the directed distance
  // from node i to the nearest seed, or -1 if no seed is reachable.
  std::vector<int> backward_distances(std::span<const VertexId> seeds) const;

 private:
  ArrivalInstance instance_;
  std::int32_t n_;
  std::vector<Edge> edges_;
  std::vector<std::vector<EdgeId>> out_;
  std::vector<std::vector<EdgeId>> in_;
};

inline SwitchGraph build_switch_graph(ArrivalInstance instance) {
  return SwitchGraph(std::move(instance));
}

// True iff every proper vertex reaches d or dbar.
bool is_terminating(const SwitchGraph& graph);
bool is_terminating(const ArrivalInstance& instance);

// Line-oriented text format:
//   arrival v1
//   n <int>
//   o <int>
//   <vertex> <even-succ> <odd-succ>     (exactly n lines)
// Successors are integers, D0 (= d) or D1 (= dbar). `#` starts a comment.
ArrivalInstance parse_instance(std::string_view text);
ArrivalInstance parse_instance(std::istream& in);
std::string serialize_instance(const ArrivalInstance& instance);

// Parses "D0", "D1", "Y" or a non-negative integer.
VertexId parse_vertex_token(std::string_view token);

}  // namespace arrival

#endif  // ARRIVAL_CORE_H_
