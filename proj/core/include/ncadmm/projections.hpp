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

#include <random>
#include <vector>

#include <Eigen/Dense>

#include "ncadmm/constraint_set.hpp"

namespace ncadmm {

/// Closest point of `s` to `z`. Exact ties are broken toward the smaller
/// value so results are reproducible across platforms. Finite sets use a
/// binary search over the sorted values.
double project_coord(const ConstraintSet& s, double z);

/// Coordinatewise projection onto the product of `sets`.
Eigen::VectorXd project(const std::vector<ConstraintSet>& sets, const Eigen::VectorXd& z);

/// Random point of the per-coordinate convex hull: bounded hulls are sampled
/// uniformly on [min, max], Reals as standard normal, NonnegReals as the
/// absolute value of a standard normal. Deterministic for a fixed generator
/// state.
Eigen::VectorXd sample_hull(const std::vector<ConstraintSet>& sets, std::mt19937_64& gen);

}  // namespace ncadmm
