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

#include "arrival/flows.h"

#include <sstream>

#include "arrival/errors.h"

namespace arrival {

BigInt outflow(const SwitchGraph& graph, const EdgeFlow& x, VertexId v) {
  BigInt sum = 0;
  for (EdgeId e : graph.out_edges(v)) sum += x[e];
  return sum;
}

BigInt inflow(const SwitchGraph& graph, const EdgeFlow& x, VertexId v) {
  BigInt sum = 0;
  for (EdgeId e : graph.in_edges(v)) sum += x[e];
  return sum;
}

bool flow_leq(const EdgeFlow& x, const EdgeFlow& y) {
  if (x.size() != y.size()) throw ValidationError("flows have different slot counts");
  for (std::size_t e = 0; e < x.size(); ++e) {
    if (x[e] > y[e]) return false;
  }
  return true;
}

BigInt flow_total(const EdgeFlow& x) {
  BigInt sum = 0;
  for (const auto& value : x.values()) sum += value;
  return sum;
}

std::optional<VertexId> FlowVerdict::destination() const {
  if (kind == VerdictKind::kValidToD) return VertexId::dest_d();
  if (kind == VerdictKind::kValidToDbar) return VertexId::dest_dbar();
  return std::nullopt;
}

std::string to_string(const FlowVerdict& verdict) {
  switch (verdict.kind) {
    case VerdictKind::kValidToD:
      return "valid switching flow to D0";
    case VerdictKind::kValidToDbar:
      return "valid switching flow to D1";
    case VerdictKind::kValidCandidate:
      return "valid candidate switching flow";
    case VerdictKind::kInvalid:
      break;
  }
  std::string out = "invalid: " + verdict.reason;
  if (verdict.vertex) out += " at vertex " + to_token(*verdict.vertex);
  return out;
}

namespace {

// Shared by both checks. `outflows[v]` is set for vertices of S.
FlowVerdict check_common(const SwitchGraph& graph, const EdgeFlow& x,
                         const std::vector<const BigInt*>& prescribed) {
  if (x.size() != graph.num_edges()) {
    return FlowVerdict::invalid("flow has " + std::to_string(x.size()) +
                                " slots, graph has " + std::to_string(graph.num_edges()));
  }
  for (const auto& value : x.values()) {
    if (value < 0) return FlowVerdict::invalid("negative flow value");
  }
  if (x[SwitchGraph::yard_edge()] != 1) {
    return FlowVerdict::invalid("yard outflow is " + to_string(x[SwitchGraph::yard_edge()]) +
                                    ", expected 1",
                                VertexId::yard());
  }
  for (std::int32_t v = 0; v < graph.num_vertices(); ++v) {
    const auto vertex = VertexId::proper(v);
    const BigInt& even = x[SwitchGraph::even_edge(v)];
    const BigInt& odd = x[SwitchGraph::odd_edge(v)];
    const BigInt out = even + odd;
    if (prescribed[v] != nullptr) {
      if (out != *prescribed[v]) {
        return FlowVerdict::invalid("outflow " + to_string(out) + " differs from prescribed " +
                                        to_string(*prescribed[v]),
                                    vertex);
      }
    } else if (out != inflow(graph, x, vertex)) {
      return FlowVerdict::invalid("flow conservation violated", vertex);
    }
    const BigInt diff = even - odd;
    if (diff != 0 && diff != 1) {
      return FlowVerdict::invalid("switching behavior violated (even - odd = " +
                                      to_string(diff) + ")",
                                  vertex);
    }
  }
  return {VerdictKind::kValidCandidate, {}, std::nullopt};
}

}  // namespace

FlowVerdict check_switching_flow(const SwitchGraph& graph, const EdgeFlow& x) {
  const std::vector<const BigInt*> none(graph.num_vertices(), nullptr);
  auto verdict = check_common(graph, x, none);
  if (!verdict.valid()) return verdict;
  if (inflow(graph, x, VertexId::dest_d()) == 1) return {VerdictKind::kValidToD, {}, {}};
  if (inflow(graph, x, VertexId::dest_dbar()) == 1) return {VerdictKind::kValidToDbar, {}, {}};
  // Unreachable when conservation holds; kept so the verdict is total.
  return FlowVerdict::invalid("no destination absorbs the unit of flow");
}

FlowVerdict check_candidate_flow(const SwitchGraph& graph, std::span<const std::int32_t> set,
                                 std::span<const BigInt> outflows, const EdgeFlow& x) {
  if (set.size() != outflows.size()) {
    throw ValidationError("set has " + std::to_string(set.size()) + " vertices but " +
                          std::to_string(outflows.size()) + " outflows were given");
  }
  std::vector<const BigInt*> prescribed(graph.num_vertices(), nullptr);
  for (std::size_t i = 0; i < set.size(); ++i) {
    if (set[i] < 0 || set[i] >= graph.num_vertices()) {
      throw ValidationError("set vertex " + std::to_string(set[i]) + " is not proper");
    }
    if (prescribed[set[i]] != nullptr) {
      throw ValidationError("set vertex " + std::to_string(set[i]) + " listed twice");
    }
    prescribed[set[i]] = &outflows[i];
  }
  return check_common(graph, x, prescribed);
}

std::string write_flow_csv(const SwitchGraph& graph, const EdgeFlow& x) {
  if (x.size() != graph.num_edges()) throw ValidationError("flow does not match graph");
  std::ostringstream out;
  out << "tail,slot,head,count\n";
  for (EdgeId e = 0; e < graph.num_edges(); ++e) {
    const auto& edge = graph.edge(e);
    out << to_token(edge.tail) << ',' << to_string(edge.slot) << ',' << to_token(edge.head)
        << ',' << x[e] << '\n';
  }
  return out.str();
}

EdgeFlow read_flow_csv(const SwitchGraph& graph, std::string_view text) {
  EdgeFlow x = EdgeFlow::zeros(graph);
  std::vector<bool> seen(graph.num_edges(), false);
  int line_no = 0;
  bool header_seen = false;
  std::size_t pos = 0;
  while (pos <= text.size()) {
    auto next = text.find('\n', pos);
    if (next == std::string_view::npos) next = text.size();
    auto line = text.substr(pos, next - pos);
    pos = next + 1;
    ++line_no;
    while (!line.empty() && (line.back() == '\r' || line.back() == ' ')) line.remove_suffix(1);
    if (line.empty()) continue;
    if (!header_seen) {
      if (line != "tail,slot,head,count") {
        throw ParseError(line_no, "expected header 'tail,slot,head,count'");
      }
      header_seen = true;
      continue;
    }
    std::vector<std::string_view> fields;
    std::size_t start = 0;
    while (true) {
      const auto comma = line.find(',', start);
      fields.push_back(line.substr(start, comma - start));
      if (comma == std::string_view::npos) break;
      start = comma + 1;
    }
    if (fields.size() != 4) throw ParseError(line_no, "expected 4 fields");

    VertexId tail = VertexId::yard();
    VertexId head = VertexId::yard();
    try {
      tail = parse_vertex_token(fields[0]);
      head = parse_vertex_token(fields[2]);
    } catch (const ValidationError& e) {
      throw ParseError(line_no, e.what());
    }
    EdgeId e = 0;
    if (fields[1] == "yard" && tail.is_yard()) {
      e = SwitchGraph::yard_edge();
    } else if ((fields[1] == "even" || fields[1] == "odd") && tail.is_proper() &&
               tail.index() < graph.num_vertices()) {
      e = fields[1] == "even" ? SwitchGraph::even_edge(tail.index())
                              : SwitchGraph::odd_edge(tail.index());
    } else {
      throw ParseError(line_no, "no edge slot (" + std::string(fields[0]) + ", " +
                                    std::string(fields[1]) + ") in this graph");
    }
    if (graph.edge(e).head != head) {
      throw ParseError(line_no, "head " + std::string(fields[2]) + " disagrees with graph (" +
                                    to_token(graph.edge(e).head) + ")");
    }
    if (seen[e]) throw ParseError(line_no, "duplicate edge slot");
    seen[e] = true;
    const auto& count = fields[3];
    if (count.empty() || count.find_first_not_of("0123456789") != std::string_view::npos) {
      throw ParseError(line_no, "count must be a non-negative integer");
    }
    x[e] = BigInt(std::string(count));
  }
  if (!header_seen) throw ParseError(0, "empty certificate");
  return x;
}

}  // namespace arrival
