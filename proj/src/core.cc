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

#include "arrival/core.h"

#include <charconv>
#include <deque>
#include <istream>
#include <iterator>
#include <optional>
#include <ostream>
#include <sstream>

#include "arrival/errors.h"

namespace arrival {

std::string to_token(VertexId v) {
  if (v.is_yard()) return "Y";
  if (v == VertexId::dest_d()) return "D0";
  if (v == VertexId::dest_dbar()) return "D1";
  return std::to_string(v.index());
}

std::ostream& operator<<(std::ostream& os, VertexId v) { return os << to_token(v); }

std::string_view to_string(Slot slot) {
  switch (slot) {
    case Slot::kYard:
      return "yard";
    case Slot::kEven:
      return "even";
    case Slot::kOdd:
      return "odd";
  }
  return "?";
}

void validate(const ArrivalInstance& instance) {
  const auto n = instance.succ_even.size();
  if (n == 0) throw ValidationError("instance has no vertices");
  if (instance.succ_odd.size() != n) {
    throw ValidationError("even and odd successor maps differ in size");
  }
  if (n > static_cast<std::size_t>(INT32_MAX - 3)) {
    throw ValidationError("too many vertices");
  }
  const auto in_range = [n](VertexId v) {
    return v.is_destination() ||
           (v.is_proper() && static_cast<std::size_t>(v.index()) < n);
  };
  if (!instance.origin.is_proper() ||
      static_cast<std::size_t>(instance.origin.index()) >= n) {
    throw ValidationError("origin " + to_token(instance.origin) +
                          " is not a proper vertex");
  }
  for (std::size_t v = 0; v < n; ++v) {
    if (!in_range(instance.succ_even[v])) {
      throw ValidationError("even successor of vertex " + std::to_string(v) +
                            " is out of range: " + to_token(instance.succ_even[v]));
    }
    if (!in_range(instance.succ_odd[v])) {
      throw ValidationError("odd successor of vertex " + std::to_string(v) +
                            " is out of range: " + to_token(instance.succ_odd[v]));
    }
  }
}

SwitchGraph::SwitchGraph(ArrivalInstance instance) : instance_(std::move(instance)) {
  validate(instance_);
  n_ = instance_.num_vertices();
  out_.resize(num_nodes());
  in_.resize(num_nodes());
  edges_.reserve(2 * static_cast<std::size_t>(n_) + 1);

  const auto add = [this](VertexId tail, Slot slot, VertexId head) {
    const EdgeId id = edges_.size();
    edges_.push_back({tail, slot, head});
    out_[node_of(tail)].push_back(id);
    in_[node_of(head)].push_back(id);
  };
  add(VertexId::yard(), Slot::kYard, instance_.origin);
  for (std::int32_t v = 0; v < n_; ++v) {
    add(VertexId::proper(v), Slot::kEven, instance_.succ_even[v]);
    add(VertexId::proper(v), Slot::kOdd, instance_.succ_odd[v]);
  }
}

std::size_t SwitchGraph::node_of(VertexId v) const {
  if (v.is_proper()) return static_cast<std::size_t>(v.index());
  if (v == VertexId::dest_d()) return static_cast<std::size_t>(n_);
  if (v == VertexId::dest_dbar()) return static_cast<std::size_t>(n_) + 1;
  return static_cast<std::size_t>(n_) + 2;
}

VertexId SwitchGraph::vertex_at(std::size_t node) const {
  const auto n = static_cast<std::size_t>(n_);
  if (node < n) return VertexId::proper(static_cast<std::int32_t>(node));
  if (node == n) return VertexId::dest_d();
  if (node == n + 1) return VertexId::dest_dbar();
  return VertexId::yard();
}

std::span<const EdgeId> SwitchGraph::out_edges(VertexId v) const {
  return out_[node_of(v)];
}

std::span<const EdgeId> SwitchGraph::in_edges(VertexId v) const {
  return in_[node_of(v)];
}

std::vector<int> SwitchGraph::backward_distances(std::span<const VertexId> seeds) const {
  std::vector<int> dist(num_nodes(), -1);
  std::deque<std::size_t> queue;
  for (VertexId seed : seeds) {
    const auto node = node_of(seed);
    if (dist[node] != 0) {
      dist[node] = 0;
      queue.push_back(node);
    }
  }
  while (!queue.empty()) {
    const auto node = queue.front();
    queue.pop_front();
    for (EdgeId e : in_[node]) {
      const auto tail = node_of(edges_[e].tail);
      if (dist[tail] < 0) {
        dist[tail] = dist[node] + 1;
        queue.push_back(tail);
      }
    }
  }
  return dist;
}

bool is_terminating(const SwitchGraph& graph) {
  const VertexId seeds[] = {VertexId::dest_d(), VertexId::dest_dbar()};
  const auto dist = graph.backward_distances(seeds);
  for (std::int32_t v = 0; v < graph.num_vertices(); ++v) {
    if (dist[v] < 0) return false;
  }
  return true;
}

bool is_terminating(const ArrivalInstance& instance) {
  return is_terminating(SwitchGraph(instance));
}

namespace {

std::optional<std::int64_t> parse_integer(std::string_view token) {
  std::int64_t value = 0;
  const auto* end = token.data() + token.size();
  auto [ptr, ec] = std::from_chars(token.data(), end, value);
  if (ec != std::errc() || ptr != end || value < 0) return std::nullopt;
  return value;
}

std::vector<std::string_view> split(std::string_view line) {
  std::vector<std::string_view> tokens;
  std::size_t i = 0;
  while (i < line.size()) {
    while (i < line.size() && (line[i] == ' ' || line[i] == '\t' || line[i] == '\r')) ++i;
    const auto start = i;
    while (i < line.size() && line[i] != ' ' && line[i] != '\t' && line[i] != '\r') ++i;
    if (i > start) tokens.push_back(line.substr(start, i - start));
  }
  return tokens;
}

}  // namespace

VertexId parse_vertex_token(std::string_view token) {
  if (token == "D0") return VertexId::dest_d();
  if (token == "D1") return VertexId::dest_dbar();
  if (token == "Y") return VertexId::yard();
  const auto value = parse_integer(token);
  if (!value || *value > INT32_MAX - 3) {
    throw ValidationError("invalid vertex token '" + std::string(token) + "'");
  }
  return VertexId::proper(static_cast<std::int32_t>(*value));
}

ArrivalInstance parse_instance(std::string_view text) {
  int line_no = 0;
  int stage = 0;  // 0: header, 1: n, 2: o, 3: vertex lines
  std::int64_t n = -1;
  ArrivalInstance instance;
  std::vector<bool> seen;

  std::size_t pos = 0;
  while (pos <= text.size()) {
    auto next = text.find('\n', pos);
    if (next == std::string_view::npos) next = text.size();
    auto line = text.substr(pos, next - pos);
    pos = next + 1;
    ++line_no;
    if (const auto hash = line.find('#'); hash != std::string_view::npos) {
      line = line.substr(0, hash);
    }
    const auto tokens = split(line);
    if (tokens.empty()) continue;

    switch (stage) {
      case 0:
        if (tokens.size() != 2 || tokens[0] != "arrival" || tokens[1] != "v1") {
          throw ParseError(line_no, "expected header 'arrival v1'");
        }
        stage = 1;
        break;
      case 1: {
        if (tokens.size() != 2 || tokens[0] != "n") {
          throw ParseError(line_no, "expected 'n <int>'");
        }
        const auto value = parse_integer(tokens[1]);
        if (!value) throw ParseError(line_no, "vertex count must be a non-negative integer");
        if (*value == 0) throw ParseError(line_no, "vertex count must be positive");
        if (*value > (1 << 24)) throw ParseError(line_no, "vertex count too large");
        n = *value;
        instance.succ_even.assign(n, VertexId::dest_d());
        instance.succ_odd.assign(n, VertexId::dest_d());
        seen.assign(n, false);
        stage = 2;
        break;
      }
      case 2: {
        if (tokens.size() != 2 || tokens[0] != "o") {
          throw ParseError(line_no, "expected 'o <int>'");
        }
        VertexId origin = VertexId::yard();
        try {
          origin = parse_vertex_token(tokens[1]);
        } catch (const ValidationError& e) {
          throw ParseError(line_no, e.what());
        }
        if (!origin.is_proper()) {
          throw ParseError(line_no, "origin must be a proper vertex, got " + to_token(origin));
        }
        if (origin.index() >= n) {
          throw ParseError(line_no, "origin " + to_token(origin) + " is out of range");
        }
        instance.origin = origin;
        stage = 3;
        break;
      }
      default: {
        if (tokens.size() != 3) {
          throw ParseError(line_no, "expected '<vertex> <even-succ> <odd-succ>'");
        }
        VertexId ids[3] = {VertexId::yard(), VertexId::yard(), VertexId::yard()};
        for (int i = 0; i < 3; ++i) {
          try {
            ids[i] = parse_vertex_token(tokens[i]);
          } catch (const ValidationError& e) {
            throw ParseError(line_no, e.what());
          }
        }
        if (!ids[0].is_proper()) {
          throw ParseError(line_no, "vertex line must start with a proper vertex");
        }
        for (int i = 0; i < 3; ++i) {
          if (ids[i].is_proper() && ids[i].index() >= n) {
            throw ParseError(line_no, "vertex " + to_token(ids[i]) + " is out of range");
          }
          if (i > 0 && ids[i].is_yard()) {
            throw ParseError(line_no, "successor cannot be the yard");
          }
        }
        const auto v = ids[0].index();
        if (seen[v]) throw ParseError(line_no, "duplicate vertex " + std::to_string(v));
        seen[v] = true;
        instance.succ_even[v] = ids[1];
        instance.succ_odd[v] = ids[2];
        break;
      }
    }
  }

  if (stage == 0) throw ParseError(0, "empty input; expected header 'arrival v1'");
  if (stage == 1) throw ParseError(0, "missing 'n <int>' line");
  if (stage == 2) throw ParseError(0, "missing 'o <int>' line");
  for (std::int64_t v = 0; v < n; ++v) {
    if (!seen[v]) throw ParseError(0, "missing line for vertex " + std::to_string(v));
  }
  return instance;
}

ArrivalInstance parse_instance(std::istream& in) {
  const std::string text{std::istreambuf_iterator<char>(in), std::istreambuf_iterator<char>()};
  return parse_instance(std::string_view(text));
}

std::string serialize_instance(const ArrivalInstance& instance) {
  validate(instance);
  std::ostringstream out;
  out << "arrival v1\n";
  out << "n " << instance.num_vertices() << "\n";
  out << "o " << instance.origin.index() << "\n";
  for (std::int32_t v = 0; v < instance.num_vertices(); ++v) {
    out << v << ' ' << to_token(instance.succ_even[v]) << ' '
        << to_token(instance.succ_odd[v]) << "\n";
  }
  return out.str();
}

}  // namespace arrival
