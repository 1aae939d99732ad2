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

#include <string>
#include <vector>

#include <Eigen/Dense>

#include "ncadmm/constraint_set.hpp"

namespace ncadmm {

/// Quadratic minimization over affine equalities and a Cartesian product of
/// per-coordinate sets:
///
///   minimize    (1/2) x'Px + q'x + r
///   subject to  Ax = b,  x_i in sets[i]
///
/// P must be symmetric positive semidefinite; A may have zero rows (m = 0).
/// Instances are treated as immutable once built and are safe to share
/// read-only across concurrent solver restarts.
struct Problem {
  Eigen::MatrixXd P;
  Eigen::VectorXd q;
  double r = 0.0;
  Eigen::MatrixXd A;  // m x n, m may be 0
  Eigen::VectorXd b;
  std::vector<ConstraintSet> sets;

  Eigen::Index n() const { return q.size(); }
  Eigen::Index m() const { return A.rows(); }
};

/// Every invariant violation, with coordinate indices where applicable.
/// Empty result means the problem is well formed (including P PSD up to
/// -1e-8 * ||P|| on the smallest eigenvalue).
std::vector<std::string> validate(const Problem& p);

/// (1/2) x'Px + q'x + r, constant term included.
double objective(const Problem& p, const Eigen::VectorXd& x);

/// l2 norm of Ax - b on the unscaled data; 0 when m = 0.
double residual(const Problem& p, const Eigen::VectorXd& x);

/// max_i dist(x_i, sets[i]); 0 iff x is in the constraint product
/// (up to floating tolerance).
double membership_distance(const Problem& p, const Eigen::VectorXd& x);

/// A problem restricted to a subset of coordinates, the rest pinned at fixed
/// values with the quadratic/linear/constant terms folded accordingly. Used
/// by polishing and by the enumeration oracle; across assignments that share
/// the frozen index set, `sub.P` and `sub.A` are identical, so one KKT
/// factorization serves all of them.
struct FrozenProblem {
  Problem sub;                           // over the free coordinates
  std::vector<Eigen::Index> frozen_idx;  // ascending
  std::vector<Eigen::Index> free_idx;    // ascending
  Eigen::VectorXd frozen_values;

  /// Full-length point from values for the free coordinates.
  Eigen::VectorXd expand(const Eigen::VectorXd& free_values) const;
};

/// frozen_idx must be ascending and in range; frozen_values aligns with it.
FrozenProblem freeze_coordinates(const Problem& p, const std::vector<Eigen::Index>& frozen_idx,
                                 const Eigen::VectorXd& frozen_values);

}  // namespace ncadmm
