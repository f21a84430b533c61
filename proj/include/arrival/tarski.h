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

// Fixed points of monotone maps on the box {0, ..., N}^k, and the capped
// inflow map D(w)_i = min(N, F(w)_i) with N = 2^n, where F(w) are the
// inflows at S of the multi-train run started with weights w.
//
// Any fixed point of D is a fixed point of F, and its multi-train profile is
// a switching flow.

#ifndef ARRIVAL_TARSKI_H_
#define ARRIVAL_TARSKI_H_

#include <cstdint>
#include <functional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "arrival/bigint.h"
#include "arrival/core.h"
#include "arrival/errors.h"
#include "arrival/flows.h"
#include "arrival/simulate.h"

namespace arrival {

using LatticePoint = std::vector<BigInt>;

std::string to_string(const LatticePoint& point);

// Componentwise a <= b.
bool point_leq(const LatticePoint& a, const LatticePoint& b);

// A pair lower <= upper with D(lower) not <= D(upper).
class MonotonicityViolation : public ArrivalError {
 public:
  MonotonicityViolation(LatticePoint lower, LatticePoint upper, LatticePoint image_lower,
                        LatticePoint image_upper);

  const LatticePoint& lower() const { return lower_; }
  const LatticePoint& upper() const { return upper_; }
  const LatticePoint& image_lower() const { return image_lower_; }
  const LatticePoint& image_upper() const { return image_upper_; }

 private:
  LatticePoint lower_, upper_, image_lower_, image_upper_;
};

// A self-map of {0, ..., cap}^k with an evaluation counter.
class TarskiProblem {
 public:
  using Function = std::function<LatticePoint(const LatticePoint&)>;

  TarskiProblem(std::size_t dimension, BigInt cap, Function function);

  std::size_t dimension() const { return dimension_; }
  const BigInt& cap() const { return cap_; }

  // Counts the call. Throws ValidationError if `w` or the image leaves the box.
  LatticePoint evaluate(const LatticePoint& w) const;

  std::uint64_t evaluations() const { return evaluations_; }
  void reset_evaluations() const { evaluations_ = 0; }

 private:
  std::size_t dimension_;
  BigInt cap_;
  Function function_;
  mutable std::uint64_t evaluations_ = 0;
};

// Seen once per evaluation of the capped map: the weights and the uncapped
// multi-train result.
using EvaluationObserver = std::function<void(const LatticePoint&, const MultiRunResult&)>;

// D for the given set and scheduler, N = 2^n. Every evaluation also checks
// sum F(w) <= 1 + sum w and throws CertificateError if it fails.
TarskiProblem build_capped_function(const SwitchGraph& graph, std::vector<std::int32_t> set,
                                    Scheduler scheduler = Scheduler::greedy(),
                                    EvaluationObserver observer = {});

enum class TarskiMethod { kRecursiveBinary, kKleene, kExhaustive };

std::string to_string(TarskiMethod method);
// "recursive-binary", "kleene", "exhaustive".
TarskiMethod parse_tarski_method(std::string_view text);

// kRecursiveBinary: binary search on the last coordinate with a recursive
//   solve of the remaining ones; at most (floor(log2(N+1)) + 1)^k evaluations.
// kKleene: iterate w <- D(w) from 0; returns the least fixed point.
// kExhaustive: first fixed point in lexicographic order; requires
//   (N+1)^k <= kExhaustiveLimit.
// Throws MonotonicityViolation when the search observes a witness pair.
LatticePoint find_fixed_point(const TarskiProblem& problem, TarskiMethod method);

inline constexpr std::uint64_t kExhaustiveLimit = 1'000'000;

// Every fixed point, by enumeration of the whole box (same size limit).
std::vector<LatticePoint> all_fixed_points(const TarskiProblem& problem);

// (ceil(log2(N+1)) + 1)^k.
BigInt recursive_binary_probe_bound(std::size_t k, const BigInt& cap);

struct SwitchingFlowCertificate {
  EdgeFlow flow;
  VertexId destination = VertexId::dest_d();
  MultiRunResult run;
};

// Runs the multi-train run at a fixed point and checks the profile is a
// switching flow (CertificateError otherwise).
SwitchingFlowCertificate fixed_point_to_switching_flow(const SwitchGraph& graph,
                                                       std::span<const std::int32_t> set,
                                                       const LatticePoint& fixed_point,
                                                       Scheduler scheduler = Scheduler::greedy());

}  // namespace arrival

#endif  // ARRIVAL_TARSKI_H_
