// Copyright 2026 The ncadmm Authors
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

#pragma once

#include <iosfwd>
#include <string>
#include <vector>

#include "ncadmm/admm.hpp"
#include "ncadmm/problem.hpp"

namespace ncadmm {

/// Problem document format (dense only):
///   {"P": [[...]], "q": [...], "r": 0.0, "A": [[...]] or [], "b": [...],
///    "sets": [{"type": "reals"|"nonneg"|"interval"|"finite"|"intrange",
///              "lo": ..., "hi": ..., "values": [...]}]}
/// Parse errors name the offending field.
Problem parse_problem_json(const std::string& text);
Problem load_problem_json(const std::string& path);
std::string problem_to_json_string(const Problem& p);
void save_problem_json(const Problem& p, const std::string& path);

/// Solution document: status, objective, residual, x, restarts, iterations,
/// factorizations, wall_ms. Fields without a value (no feasible point; timing
/// suppressed) are null. With include_timing = false the output is a pure
/// function of problem + settings, byte-identical across repeated runs.
std::string solution_to_json_string(const Solution& sol, bool include_timing);

/// One row per iteration: restart, k, objective, residual, best_so_far.
void write_trace_csv(const std::vector<TraceRow>& trace, std::ostream& os);
void save_trace_csv(const std::vector<TraceRow>& trace, const std::string& path);

}  // namespace ncadmm
