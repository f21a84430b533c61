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

#include "arrival/generate.h"

#include <vector>

#include "arrival/errors.h"
#include "arrival/rng.h"

namespace arrival {

std::string to_string(Family family) {
  switch (family) {
    case Family::kRandomTerminating:
      return "random";
    case Family::kLayeredChain:
      return "chain";
    case Family::kLongRunCounter:
      return "counter";
    case Family::kTwoCycleGrid:
      return "grid";
  }
  return "?";
}

Family parse_family(std::string_view text) {
  if (text == "random") return Family::kRandomTerminating;
  if (text == "chain") return Family::kLayeredChain;
  if (text == "counter") return Family::kLongRunCounter;
  if (text == "grid") return Family::kTwoCycleGrid;
  throw ValidationError("unknown family '" + std::string(text) + "'");
}

namespace {

VertexId p(std::int32_t v) { return VertexId::proper(v); }

ArrivalInstance random_terminating(std::int32_t n, std::uint64_t seed) {
  Xorshift64Star rng(seed);
  const auto draw = [&]() {
    const auto r = static_cast<std::int32_t>(rng.below(static_cast<std::uint64_t>(n) + 2));
    if (r == n) return VertexId::dest_d();
    if (r == n + 1) return VertexId::dest_dbar();
    return p(r);
  };
  ArrivalInstance instance;
  instance.origin = p(static_cast<std::int32_t>(rng.below(n)));
  for (std::int32_t v = 0; v < n; ++v) {
    instance.succ_even.push_back(draw());
    instance.succ_odd.push_back(draw());
  }

  while (true) {
    const SwitchGraph graph(instance);
    const VertexId seeds[] = {VertexId::dest_d(), VertexId::dest_dbar()};
    const auto dist = graph.backward_distances(seeds);
    std::vector<VertexId> reaching = {VertexId::dest_d(), VertexId::dest_dbar()};
    std::int32_t stuck = -1;
    for (std::int32_t v = 0; v < n; ++v) {
      if (dist[v] >= 0) {
        reaching.push_back(p(v));
      } else if (stuck < 0) {
        stuck = v;
      }
    }
    if (stuck < 0) return instance;
    instance.succ_odd[stuck] = reaching[rng.below(reaching.size())];
  }
}

// v_i sends its even train back to the top vertex and its odd train one
// layer down; the top vertex loops on itself.
ArrivalInstance layered_chain(std::int32_t n) {
  ArrivalInstance instance;
  instance.origin = p(n - 1);
  for (std::int32_t v = 0; v < n; ++v) {
    instance.succ_even.push_back(p(n - 1));
    instance.succ_odd.push_back(v == 0 ? VertexId::dest_d() : p(v - 1));
  }
  return instance;
}

// a_j = 2j, b_j = 2j + 1 form a 2-cycle. a_j restarts the top pair on odd
// visits and b_j drops to a_{j-1}, so a pair passes one train down per
// three received. An odd n adds an entry vertex.
ArrivalInstance long_run_counter(std::int32_t n) {
  const std::int32_t pairs = n / 2;
  ArrivalInstance instance;
  instance.succ_even.resize(n, VertexId::dest_d());
  instance.succ_odd.resize(n, VertexId::dest_d());
  const auto top = pairs > 0 ? p(2 * (pairs - 1)) : VertexId::dest_d();
  for (std::int32_t j = 0; j < pairs; ++j) {
    const auto a = 2 * j;
    const auto b = 2 * j + 1;
    instance.succ_even[a] = p(b);
    instance.succ_odd[a] = top;
    instance.succ_even[b] = p(a);
    instance.succ_odd[b] = j == 0 ? VertexId::dest_d() : p(a - 2);
  }
  if (n % 2 == 1) {
    instance.succ_even[n - 1] = top;
    instance.succ_odd[n - 1] = pairs > 0 ? top : VertexId::dest_dbar();
    instance.origin = p(n - 1);
  } else {
    instance.origin = top;
  }
  return instance;
}

ArrivalInstance two_cycle_grid(std::int32_t n) {
  const std::int32_t pairs = n / 2;
  ArrivalInstance instance;
  instance.succ_even.resize(n, VertexId::dest_d());
  instance.succ_odd.resize(n, VertexId::dest_dbar());
  for (std::int32_t j = 0; j < pairs; ++j) {
    const auto a = 2 * j;
    const auto b = 2 * j + 1;
    instance.succ_even[a] = p(b);
    instance.succ_even[b] = p(a);
    instance.succ_odd[a] = j == 0 ? VertexId::dest_d() : p(a - 1);
    instance.succ_odd[b] = j == 0 ? VertexId::dest_dbar() : p(a - 2);
  }
  if (n % 2 == 1 && pairs > 0) {
    instance.succ_even[n - 1] = p(n - 3);
    instance.succ_odd[n - 1] = p(n - 2);
  }
  instance.origin = n % 2 == 1 ? p(n - 1) : p(2 * (pairs - 1));
  return instance;
}

}  // namespace

ArrivalInstance generate(const GeneratorSpec& spec) {
  if (spec.n < 1) throw ValidationError("generator needs n >= 1");
  switch (spec.family) {
    case Family::kRandomTerminating:
      return random_terminating(spec.n, spec.seed);
    case Family::kLayeredChain:
      return layered_chain(spec.n);
    case Family::kLongRunCounter:
      return long_run_counter(spec.n);
    case Family::kTwoCycleGrid:
      return two_cycle_grid(spec.n);
  }
  throw ValidationError("unknown family");
}

}  // namespace arrival
