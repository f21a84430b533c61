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

// Single-line JSON summaries (JSON-lines when printed one per line).
// Integers that do not fit in 64 bits are emitted as decimal strings.

#ifndef ARRIVAL_REPORT_H_
#define ARRIVAL_REPORT_H_

#include <string>

#include "arrival/decompose.h"
#include "arrival/simulate.h"
#include "arrival/solver.h"

namespace arrival {

std::string to_json(const Decision& decision);
std::string to_json(const MethodOutcome& outcome);
std::string to_json(const RunResult& run);
std::string to_json(const MultiRunResult& run, std::span<const std::int32_t> set);
std::string to_json(const PhiSet& phi_set);
std::string to_json(const FeedbackVertexSet& fvs);

}  // namespace arrival

#endif  // ARRIVAL_REPORT_H_
