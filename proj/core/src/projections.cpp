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

#include "ncadmm/projections.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

#include "ncadmm/rng.hpp"

namespace ncadmm {

namespace {

// Nearest integer with exact .5 ties going to the smaller value.
double round_half_down(double z) { return std::ceil(z - 0.5); }

double project_finite(const std::vector<double>& values, double z) {
  // log2(k) comparisons; candidates are the neighbors of the insertion point.
  const auto it = std::lower_bound(values.begin(), values.end(), z);
  if (it == values.begin()) return values.front();
  if (it == values.end()) return values.back();
  const double above = *it;
  const double below = *(it - 1);
  // Tie toward the smaller value.
  return (z - below) <= (above - z) ? below : above;
}

}  // namespace

double project_coord(const ConstraintSet& s, double z) {
  switch (s.kind()) {
    case ConstraintSet::Kind::kReals:
      return z;
    case ConstraintSet::Kind::kNonnegReals:
      return std::max(z, 0.0);
    case ConstraintSet::Kind::kInterval:
      return std::min(std::max(z, s.lo()), s.hi());
    case ConstraintSet::Kind::kFiniteSet:
      return project_finite(s.values(), z);
    case ConstraintSet::Kind::kIntegerRange:
      return std::min(std::max(round_half_down(z), s.lo()), s.hi());
  }
  return z;
}

Eigen::VectorXd project(const std::vector<ConstraintSet>& sets, const Eigen::VectorXd& z) {
  if (static_cast<Eigen::Index>(sets.size()) != z.size())
    throw std::invalid_argument("project: sets/vector length mismatch");
  Eigen::VectorXd out(z.size());
  for (Eigen::Index i = 0; i < z.size(); ++i)
    out(i) = project_coord(sets[static_cast<std::size_t>(i)], z(i));
  return out;
}

Eigen::VectorXd sample_hull(const std::vector<ConstraintSet>& sets, std::mt19937_64& gen) {
  Eigen::VectorXd out(static_cast<Eigen::Index>(sets.size()));
  for (std::size_t i = 0; i < sets.size(); ++i) {
    const ConstraintSet& s = sets[i];
    double v;
    if (s.hull_bounded()) {
      v = rng::uniform(gen, s.hull_min(), s.hull_max());
    } else if (s.kind() == ConstraintSet::Kind::kNonnegReals) {
      v = std::abs(rng::normal(gen));
    } else {
      v = rng::normal(gen);
    }
    out(static_cast<Eigen::Index>(i)) = v;
  }
  return out;
}

}  // namespace ncadmm
