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

#include "arrival/decompose.h"

#include <algorithm>
#include <charconv>
#include <cmath>
#include <deque>
#include <functional>
#include <numeric>
#include <queue>

#include "arrival/errors.h"

namespace arrival {

int LayerDecomposition::distance(VertexId v) const {
  if (v == VertexId::dest_d() || v == VertexId::dest_dbar()) return 0;
  return dist.at(static_cast<std::size_t>(v.index()));
}

LayerDecomposition layer_decomposition(const SwitchGraph& graph) {
  const VertexId seeds[] = {VertexId::dest_d(), VertexId::dest_dbar()};
  auto dist = graph.backward_distances(seeds);
  const auto n = graph.num_vertices();
  dist.resize(static_cast<std::size_t>(n) + 2);

  LayerDecomposition result;
  for (std::int32_t v = 0; v < n; ++v) {
    if (dist[v] < 0) {
      throw ValidationError("instance is not terminating: vertex " + std::to_string(v) +
                            " reaches no destination");
    }
    result.ell = std::max(result.ell, dist[v]);
  }
  result.layers.resize(static_cast<std::size_t>(result.ell) + 1);
  result.layers[0] = {VertexId::dest_d(), VertexId::dest_dbar()};
  for (std::int32_t v = 0; v < n; ++v) result.layers[dist[v]].push_back(VertexId::proper(v));
  result.dist = std::move(dist);
  return result;
}

std::vector<int> distances_to_set(const SwitchGraph& graph, std::span<const std::int32_t> set) {
  std::vector<VertexId> seeds = {VertexId::dest_d(), VertexId::dest_dbar()};
  for (auto v : set) {
    if (v < 0 || v >= graph.num_vertices()) {
      throw ValidationError("set vertex " + std::to_string(v) + " is not proper");
    }
    seeds.push_back(VertexId::proper(v));
  }
  auto dist = graph.backward_distances(seeds);
  dist.resize(static_cast<std::size_t>(graph.num_vertices()));
  return dist;
}

int radius_to_set(const SwitchGraph& graph, std::span<const std::int32_t> set) {
  int radius = 0;
  for (int d : distances_to_set(graph, set)) {
    if (d < 0) return -1;
    radius = std::max(radius, d);
  }
  return radius;
}

Rational Rational::make(std::int64_t num, std::int64_t den) {
  if (den == 0) throw ValidationError("zero denominator");
  if (den < 0) {
    num = -num;
    den = -den;
  }
  const auto g = std::gcd(num < 0 ? -num : num, den);
  return {num / g, den / g};
}

Rational Rational::parse(std::string_view text) {
  const auto parse_int = [&](std::string_view digits) {
    std::int64_t value = 0;
    auto [ptr, ec] = std::from_chars(digits.data(), digits.data() + digits.size(), value);
    if (digits.empty() || ec != std::errc() || ptr != digits.data() + digits.size()) {
      throw ValidationError("invalid rational '" + std::string(text) + "'");
    }
    return value;
  };
  if (const auto slash = text.find('/'); slash != std::string_view::npos) {
    return make(parse_int(text.substr(0, slash)), parse_int(text.substr(slash + 1)));
  }
  if (const auto dot = text.find('.'); dot != std::string_view::npos) {
    const auto whole = text.substr(0, dot);
    const auto frac = text.substr(dot + 1);
    if (frac.size() > 15 || frac.empty()) {
      throw ValidationError("invalid rational '" + std::string(text) + "'");
    }
    std::int64_t scale = 1;
    for (std::size_t i = 0; i < frac.size(); ++i) scale *= 10;
    const std::int64_t w = whole.empty() ? 0 : parse_int(whole);
    return make(w * scale + parse_int(frac), scale);
  }
  return make(parse_int(text), 1);
}

std::string to_string(const Rational& r) {
  return std::to_string(r.num) + "/" + std::to_string(r.den);
}

Rational default_phi(std::int32_t n) {
  constexpr std::int64_t kScale = 1'000'000;
  const double phi = std::sqrt(3.0 / (2.0 * std::max<std::int32_t>(n, 1)));
  auto num = static_cast<std::int64_t>(std::floor(phi * kScale));
  num = std::clamp<std::int64_t>(num, 1, kScale - 1);
  return Rational::make(num, kScale);
}

PhiSet compute_phi_set(const SwitchGraph& graph, Rational phi) {
  if (phi.num <= 0 || phi.num >= phi.den) {
    throw ValidationError("phi must lie strictly between 0 and 1, got " + to_string(phi));
  }
  const auto layers = layer_decomposition(graph);
  const auto n = graph.num_vertices();

  PhiSet result;
  result.phi = phi;
  // |L_i| < phi |U|  <=>  |L_i| den < num |U|, exact in 128 bits.
  __int128 accumulated = static_cast<__int128>(layers.layers[0].size());
  for (std::size_t i = 1; i < layers.layers.size(); ++i) {
    const auto& layer = layers.layers[i];
    const auto size = static_cast<__int128>(layer.size());
    if (size * phi.den < static_cast<__int128>(phi.num) * accumulated) {
      for (auto v : layer) result.vertices.push_back(v.index());
      accumulated = 0;
    }
    accumulated += size;
  }
  std::sort(result.vertices.begin(), result.vertices.end());

  result.certified_radius = radius_to_set(graph, result.vertices);
  result.size_bound = phi.value() * (n + 2);
  result.radius_bound = std::log2(static_cast<double>(n) + 2) / phi.value();

  if (static_cast<__int128>(result.vertices.size()) * phi.den >
      static_cast<__int128>(phi.num) * (n + 2)) {
    throw CertificateError("phi-set exceeds its size bound");
  }
  if (result.certified_radius < 0 || result.certified_radius > result.radius_bound) {
    throw CertificateError("phi-set exceeds its radius bound");
  }
  return result;
}

std::optional<std::vector<std::int32_t>> topological_order_outside(
    const SwitchGraph& graph, std::span<const std::int32_t> set) {
  const auto n = graph.num_vertices();
  std::vector<bool> excluded(n, false);
  for (auto v : set) {
    if (v < 0 || v >= n) throw ValidationError("set vertex " + std::to_string(v) + " is not proper");
    excluded[v] = true;
  }
  std::vector<int> indegree(n, 0);
  for (std::int32_t v = 0; v < n; ++v) {
    if (excluded[v]) continue;
    for (VertexId head : {graph.succ_even(v), graph.succ_odd(v)}) {
      if (head.is_proper() && !excluded[head.index()]) ++indegree[head.index()];
    }
  }
  std::priority_queue<std::int32_t, std::vector<std::int32_t>, std::greater<>> ready;
  std::size_t remaining = 0;
  for (std::int32_t v = 0; v < n; ++v) {
    if (excluded[v]) continue;
    ++remaining;
    if (indegree[v] == 0) ready.push(v);
  }
  std::vector<std::int32_t> order;
  order.reserve(remaining);
  while (!ready.empty()) {
    const auto v = ready.top();
    ready.pop();
    order.push_back(v);
    for (VertexId head : {graph.succ_even(v), graph.succ_odd(v)}) {
      if (head.is_proper() && !excluded[head.index()] && --indegree[head.index()] == 0) {
        ready.push(head.index());
      }
    }
  }
  if (order.size() != remaining) return std::nullopt;
  return order;
}

namespace {

// Exact branch and bound: every FVS must hit every cycle, so branching on the
// vertices of one (shortest) cycle is complete.
class FvsSearch {
 public:
  explicit FvsSearch(const SwitchGraph& graph) : n_(graph.num_vertices()), succ_(n_) {
    for (std::int32_t v = 0; v < n_; ++v) {
      for (VertexId head : {graph.succ_even(v), graph.succ_odd(v)}) {
        if (head.is_proper() &&
            std::find(succ_[v].begin(), succ_[v].end(), head.index()) == succ_[v].end()) {
          succ_[v].push_back(head.index());
        }
      }
    }
  }

  // Finds a set of at most `budget` allowed vertices that, together with the
  // already removed ones, breaks every cycle. Appends it to `chosen`.
  bool search(std::vector<bool>& removed, const std::vector<bool>& allowed, int budget,
              std::vector<std::int32_t>& chosen) const {
    const auto cycle = shortest_cycle(removed);
    if (cycle.empty()) return true;
    if (budget == 0) return false;
    for (auto v : cycle) {
      if (!allowed[v]) continue;
      removed[v] = true;
      chosen.push_back(v);
      if (search(removed, allowed, budget - 1, chosen)) {
        removed[v] = false;
        return true;
      }
      chosen.pop_back();
      removed[v] = false;
    }
    return false;
  }

  std::int32_t size() const { return n_; }

 private:
  // Vertices of a shortest directed cycle avoiding `removed`, ascending;
  // empty if acyclic.
  std::vector<std::int32_t> shortest_cycle(const std::vector<bool>& removed) const {
    std::vector<std::int32_t> best;
    std::vector<int> dist(n_);
    std::vector<std::int32_t> parent(n_);
    for (std::int32_t s = 0; s < n_; ++s) {
      if (removed[s]) continue;
      std::fill(dist.begin(), dist.end(), -1);
      std::deque<std::int32_t> queue = {s};
      dist[s] = 0;
      std::int32_t closing = -1;
      while (!queue.empty() && closing < 0) {
        const auto u = queue.front();
        queue.pop_front();
        if (!best.empty() && dist[u] + 1 >= static_cast<int>(best.size())) break;
        for (auto w : succ_[u]) {
          if (removed[w]) continue;
          if (w == s) {
            closing = u;
            break;
          }
          if (dist[w] < 0) {
            dist[w] = dist[u] + 1;
            parent[w] = u;
            queue.push_back(w);
          }
        }
      }
      if (closing < 0) continue;
      std::vector<std::int32_t> cycle;
      for (auto u = closing; u != s; u = parent[u]) cycle.push_back(u);
      cycle.push_back(s);
      if (best.empty() || cycle.size() < best.size()) best = std::move(cycle);
      if (best.size() == 1) break;
    }
    std::sort(best.begin(), best.end());
    return best;
  }

  std::int32_t n_;
  std::vector<std::vector<std::int32_t>> succ_;
};

}  // namespace

std::optional<FeedbackVertexSet> feedback_vertex_set(const SwitchGraph& graph, int k_max) {
  if (k_max < 0) return std::nullopt;
  const FvsSearch search(graph);
  const auto n = search.size();
  const std::vector<bool> everything(n, true);

  int minimum = -1;
  for (int k = 0; k <= std::min<int>(k_max, n); ++k) {
    std::vector<bool> removed(n, false);
    std::vector<std::int32_t> chosen;
    if (search.search(removed, everything, k, chosen)) {
      minimum = k;
      break;
    }
  }
  if (minimum < 0) return std::nullopt;

  // Lexicographically smallest minimum set, one element at a time.
  FeedbackVertexSet result;
  std::vector<bool> removed(n, false);
  for (int slot = 0; slot < minimum; ++slot) {
    const std::int32_t first = result.vertices.empty() ? 0 : result.vertices.back() + 1;
    bool placed = false;
    for (std::int32_t v = first; v < n && !placed; ++v) {
      std::vector<bool> allowed(n, false);
      for (std::int32_t u = v + 1; u < n; ++u) allowed[u] = true;
      removed[v] = true;
      std::vector<std::int32_t> rest;
      if (search.search(removed, allowed, minimum - slot - 1, rest)) {
        result.vertices.push_back(v);
        placed = true;
      } else {
        removed[v] = false;
      }
    }
    if (!placed) throw CertificateError("feedback vertex set reconstruction failed");
  }

  auto order = topological_order_outside(graph, result.vertices);
  if (!order) throw CertificateError("feedback vertex set leaves a cycle");
  result.topological_order = std::move(*order);
  return result;
}

}  // namespace arrival
