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

#include <cstdint>
#include <limits>

#include <Eigen/Dense>

#include "ncadmm/problem.hpp"

namespace ncadmm {

struct OracleResult {
  bool feasible = false;
  Eigen::VectorXd x;
  double objective = std::numeric_limits<double>::infinity();
  std::int64_t combinations = 0;  // discrete assignments enumerated
};

/// Global solve by brute force: every assignment of the finite-set /
/// integer-range coordinates is enumerated (lexicographically, coordinate
/// values ascending) and the remaining convex problem solved for each.
/// All-real remainders go through the direct equality-QP solve; remainders
/// with intervals or half-lines run the convex splitting iteration to 1e-9.
/// An assignment counts as feasible when its completed point satisfies
/// ||Ax - b|| <= 1e-7, deliberately stricter than the heuristic's default
/// acceptance tolerance. Ties keep the first assignment in enumeration
/// order. Throws when the number of assignments exceeds combination_cap.
OracleResult enumerate_solve(const Problem& p, std::int64_t combination_cap = 1 << 16);

/// (f_heur - f_star) / max(1, |f_star|). Throws std::invalid_argument when
/// the oracle result is infeasible or the heuristic point leaves the
/// constraint product, and std::logic_error when the "heuristic" undercuts
/// the global optimum by more than 1e-9 (an impossible claim; it means the
/// point was not actually feasible or the oracle result is stale).
double optimality_gap(const Problem& p, const Eigen::VectorXd& x_heuristic,
                      const OracleResult& oracle);

}  // namespace ncadmm
