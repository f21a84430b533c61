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

#ifndef ARRIVAL_GENERATE_H_
#define ARRIVAL_GENERATE_H_

#include <cstdint>
#include <string>
#include <string_view>

#include "arrival/core.h"

namespace arrival {

// Instance families. All of them are terminating and deterministic in
// (family, n, seed); only kRandomTerminating uses the seed.
//
//   kRandomTerminating  successors uniform over V u {d, dbar}; every vertex
//                       that cannot reach a destination gets a random odd
//                       successor that can, lowest index first.
//   kLayeredChain       v_i -> (v_top, v_{i-1}), v_0 -> d on odd. One vertex
//                       per layer, origin at the top; the run meets the
//                       traversal bound with equality.
//   kLongRunCounter     pairs (a_j, b_j) forming 2-cycles; a pair passes one
//                       of every three arrivals down and returns the rest to
//                       the top pair, so the run grows like 3^(n/2).
//   kTwoCycleGrid       floor(n/2) disjoint 2-cycles whose odd edges drop to
//                       the previous pair; minimum FVS size floor(n/2).
enum class Family { kRandomTerminating, kLayeredChain, kLongRunCounter, kTwoCycleGrid };

// "random", "chain", "counter", "grid".
std::string to_string(Family family);
Family parse_family(std::string_view text);

struct GeneratorSpec {
  Family family = Family::kRandomTerminating;
  std::int32_t n = 1;
  std::uint64_t seed = 0;
};

// Throws ValidationError when n < 1.
ArrivalInstance generate(const GeneratorSpec& spec);

}  // namespace arrival

#endif  // ARRIVAL_GENERATE_H_
