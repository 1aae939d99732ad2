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

#include <Eigen/Dense>

#include "ncadmm/problem.hpp"

namespace ncadmm {

enum class PreconditionMode { kNone, kRowL1, kRowL2 };

/// Diagonal scalings for the preconditioned iteration: E = diag(e) acts on the
/// affine rows, F = diag(f) on the consensus rows. All entries are strictly
/// positive; identity scaling is all ones.
struct Scaling {
  Eigen::VectorXd e;  // m
  Eigen::VectorXd f;  // n

  static Scaling identity(Eigen::Index m, Eigen::Index n) {
    return Scaling{Eigen::VectorXd::Ones(m), Eigen::VectorXd::Ones(n)};
  }
};

/// Row-normalization heuristic: e_i = 1 / ||a_i|| in the chosen norm, f = 1.
/// Zero rows of A keep e_i = 1 (a zero row with b_i != 0 is flagged by
/// validate instead). Mode kNone returns all ones.
Scaling compute_scaling(const Problem& p, PreconditionMode mode);

/// Ratio of the largest singular value to the smallest nonzero singular value
/// of a symmetric PSD matrix ("nonzero" meaning sigma > 1e-12 * sigma_max).
/// Diagnostic only; throws on the zero matrix.
double effective_condition_number(const Eigen::MatrixXd& M);

}  // namespace ncadmm
