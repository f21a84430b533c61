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

#include "arrival/tarski.h"

#include <memory>
#include <optional>
#include <utility>

namespace arrival {

std::string to_string(const LatticePoint& point) {
  std::string out = "(";
  for (std::size_t i = 0; i < point.size(); ++i) {
    if (i > 0) out += ", ";
    out += point[i].str();
  }
  return out + ")";
}

bool point_leq(const LatticePoint& a, const LatticePoint& b) {
  if (a.size() != b.size()) return false;
  for (std::size_t i = 0; i < a.size(); ++i) {
    if (a[i] > b[i]) return false;
  }
  return true;
}

MonotonicityViolation::MonotonicityViolation(LatticePoint lower, LatticePoint upper,
                                             LatticePoint image_lower, LatticePoint image_upper)
    : ArrivalError("monotonicity violated: " + to_string(lower) + " <= " + to_string(upper) +
                   " but D maps them to " + to_string(image_lower) + " and " +
                   to_string(image_upper)),
      lower_(std::move(lower)),
      upper_(std::move(upper)),
      image_lower_(std::move(image_lower)),
      image_upper_(std::move(image_upper)) {}

TarskiProblem::TarskiProblem(std::size_t dimension, BigInt cap, Function function)
    : dimension_(dimension), cap_(std::move(cap)), function_(std::move(function)) {
  if (cap_ < 0) throw ValidationError("lattice cap must be non-negative");
}

LatticePoint TarskiProblem::evaluate(const LatticePoint& w) const {
  const auto in_box = [this](const LatticePoint& p) {
    if (p.size() != dimension_) return false;
    for (const auto& x : p) {
      if (x < 0 || x > cap_) return false;
    }
    return true;
  };
  if (!in_box(w)) throw ValidationError("point " + to_string(w) + " is outside the lattice");
  ++evaluations_;
  auto image = function_(w);
  if (!in_box(image)) {
    throw ValidationError("image " + to_string(image) + " of " + to_string(w) +
                          " is outside the lattice");
  }
  return image;
}

TarskiProblem build_capped_function(const SwitchGraph& graph, std::vector<std::int32_t> set,
                                    Scheduler scheduler, EvaluationObserver observer) {
  auto shared = std::make_shared<const SwitchGraph>(graph);
  BigInt cap = pow2(static_cast<unsigned>(graph.num_vertices()));
  const auto k = set.size();
  // Reject bad sets now rather than on first evaluation.
  multi_run(graph, set, LatticePoint(k), scheduler);
  auto function = [shared, set = std::move(set), scheduler, observer = std::move(observer),
                   cap](const LatticePoint& w) {
    const auto run = multi_run(*shared, set, w, scheduler);
    BigInt absorbed = 0;
    BigInt emitted = 1;
    for (const auto& f : run.inflows) absorbed += f;
    for (const auto& x : w) emitted += x;
    if (absorbed > emitted) {
      throw CertificateError("flow ledger violated at " + to_string(w) + ": " +
                             absorbed.str() + " > " + emitted.str());
    }
    if (observer) observer(w, run);
    LatticePoint image(run.inflows.size());
    for (std::size_t i = 0; i < image.size(); ++i) {
      image[i] = run.inflows[i] < cap ? run.inflows[i] : cap;
    }
    return image;
  };
  return TarskiProblem(k, std::move(cap), std::move(function));
}

std::string to_string(TarskiMethod method) {
  switch (method) {
    case TarskiMethod::kRecursiveBinary:
      return "recursive-binary";
    case TarskiMethod::kKleene:
      return "kleene";
    case TarskiMethod::kExhaustive:
      return "exhaustive";
  }
  return "?";
}

TarskiMethod parse_tarski_method(std::string_view text) {
  if (text == "recursive-binary") return TarskiMethod::kRecursiveBinary;
  if (text == "kleene") return TarskiMethod::kKleene;
  if (text == "exhaustive") return TarskiMethod::kExhaustive;
  throw ValidationError("unknown Tarski method '" + std::string(text) + "'");
}

namespace {

struct Evaluated {
  LatticePoint point;
  LatticePoint image;
};

// Sub-box of the lattice that D maps into itself. A lower bound lo_i other
// than 0 carries a witness q below every point of the box with D(q)_i >= lo_i;
// upper bounds symmetrically. Witnesses turn an out-of-box image into a
// concrete violating pair.
struct Box {
  LatticePoint lo;
  LatticePoint hi;
  std::vector<std::optional<Evaluated>> lo_witness;
  std::vector<std::optional<Evaluated>> hi_witness;
};

class RecursiveBinarySearch {
 public:
  explicit RecursiveBinarySearch(const TarskiProblem& problem) : problem_(problem) {}

  LatticePoint run() {
    const auto k = problem_.dimension();
    Box box{LatticePoint(k, 0), LatticePoint(k, problem_.cap()),
            std::vector<std::optional<Evaluated>>(k), std::vector<std::optional<Evaluated>>(k)};
    return solve(k, std::move(box)).point;
  }

 private:
  // Coordinates >= j are pinned (lo == hi). Returns p in the box with
  // D(p)_i = p_i for all i < j.
  Evaluated solve(std::size_t j, Box box) {
    if (j == 0) {
      auto image = problem_.evaluate(box.lo);
      return {box.lo, std::move(image)};
    }
    const std::size_t c = j - 1;
    while (true) {
      const BigInt mid = (box.lo[c] + box.hi[c]) / 2;
      Box sub = box;
      sub.lo[c] = mid;
      sub.hi[c] = mid;
      sub.lo_witness[c].reset();
      sub.hi_witness[c].reset();
      auto probe = solve(c, std::move(sub));
      const BigInt& value = probe.image[c];

      if (value < box.lo[c]) {
        const auto& q = *box.lo_witness[c];
        throw MonotonicityViolation(q.point, probe.point, q.image, probe.image);
      }
      if (value > box.hi[c]) {
        const auto& q = *box.hi_witness[c];
        throw MonotonicityViolation(probe.point, q.point, probe.image, q.image);
      }
      if (value == mid) return probe;

      // probe <= D(probe) (or >=): the box above (below) it is invariant.
      const bool up = value > mid;
      auto& bound = up ? box.lo : box.hi;
      auto& witness = up ? box.lo_witness : box.hi_witness;
      for (std::size_t i = 0; i < c; ++i) {
        bound[i] = probe.point[i];
        witness[i] = probe;
      }
      bound[c] = up ? mid + 1 : mid - 1;
      witness[c] = std::move(probe);
    }
  }

  const TarskiProblem& problem_;
};

LatticePoint kleene(const TarskiProblem& problem) {
  LatticePoint previous;
  LatticePoint current(problem.dimension(), 0);
  while (true) {
    auto image = problem.evaluate(current);
    if (image == current) return current;
    if (!point_leq(current, image)) {
      // previous <= current, D(previous) = current, D(current) = image.
      throw MonotonicityViolation(previous, current, current, image);
    }
    previous = std::move(current);
    current = std::move(image);
  }
}

BigInt lattice_size(const TarskiProblem& problem) {
  return boost::multiprecision::pow(BigInt(problem.cap() + 1),
                                    static_cast<unsigned>(problem.dimension()));
}

// Calls `visit` on every point in lexicographic order until it returns false.
template <typename Visit>
void enumerate(const TarskiProblem& problem, Visit visit) {
  if (lattice_size(problem) > kExhaustiveLimit) {
    throw ValidationError("lattice too large for exhaustive search");
  }
  LatticePoint point(problem.dimension(), 0);
  while (true) {
    if (!visit(point)) return;
    std::size_t i = point.size();
    while (i > 0) {
      --i;
      if (point[i] < problem.cap()) {
        ++point[i];
        break;
      }
      point[i] = 0;
      if (i == 0) return;
    }
    if (point.empty()) return;
  }
}

}  // namespace

LatticePoint find_fixed_point(const TarskiProblem& problem, TarskiMethod method) {
  switch (method) {
    case TarskiMethod::kRecursiveBinary:
      return RecursiveBinarySearch(problem).run();
    case TarskiMethod::kKleene:
      return kleene(problem);
    case TarskiMethod::kExhaustive: {
      std::optional<LatticePoint> found;
      enumerate(problem, [&](const LatticePoint& w) {
        if (problem.evaluate(w) == w) {
          found = w;
          return false;
        }
        return true;
      });
      if (!found) throw CertificateError("no fixed point exists; the map is not monotone");
      return *found;
    }
  }
  throw ValidationError("unknown Tarski method");
}

std::vector<LatticePoint> all_fixed_points(const TarskiProblem& problem) {
  std::vector<LatticePoint> points;
  enumerate(problem, [&](const LatticePoint& w) {
    if (problem.evaluate(w) == w) points.push_back(w);
    return true;
  });
  return points;
}

BigInt recursive_binary_probe_bound(std::size_t k, const BigInt& cap) {
  // ceil(log2(N + 1)) is the bit length of N.
  return boost::multiprecision::pow(BigInt(bit_length(cap) + 1), static_cast<unsigned>(k));
}

SwitchingFlowCertificate fixed_point_to_switching_flow(const SwitchGraph& graph,
                                                       std::span<const std::int32_t> set,
                                                       const LatticePoint& fixed_point,
                                                       Scheduler scheduler) {
  auto run = multi_run(graph, set, fixed_point, scheduler);
  if (run.inflows != fixed_point) {
    throw CertificateError("weights " + to_string(fixed_point) +
                           " are not a fixed point of the uncapped inflow map (inflows " +
                           to_string(run.inflows) + ")");
  }
  const auto verdict = check_switching_flow(graph, run.profile);
  if (!verdict.valid()) {
    throw CertificateError("fixed-point profile is not a switching flow: " + to_string(verdict));
  }
  SwitchingFlowCertificate cert;
  cert.destination = *verdict.destination();
  cert.flow = run.profile;
  cert.run = std::move(run);
  return cert;
}

}  // namespace arrival
