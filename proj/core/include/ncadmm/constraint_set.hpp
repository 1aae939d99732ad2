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
#include <string>
#include <vector>

namespace ncadmm {

/// One per-coordinate constraint set. The feasible region of a problem is the
/// Cartesian product of these, one per variable.
///
/// Factories do not reject bad parameters (an out-of-order interval, an empty
/// value list); `violations()` reports them so problem validation can name
/// every defect instead of dying on the first.
class ConstraintSet {
 public:
  enum class Kind { kReals, kNonnegReals, kInterval, kFiniteSet, kIntegerRange };

  static ConstraintSet reals() { return ConstraintSet(Kind::kReals); }
  static ConstraintSet nonneg_reals() { return ConstraintSet(Kind::kNonnegReals); }
  static ConstraintSet interval(double lo, double hi) {
    ConstraintSet s(Kind::kInterval);
    s.lo_ = lo;
    s.hi_ = hi;
    return s;
  }
  /// Values must be finite and strictly increasing.
  static ConstraintSet finite_set(std::vector<double> values) {
    ConstraintSet s(Kind::kFiniteSet);
    s.values_ = std::move(values);
    return s;
  }
  static ConstraintSet integer_range(std::int64_t lo, std::int64_t hi) {
    ConstraintSet s(Kind::kIntegerRange);
    s.lo_ = static_cast<double>(lo);
    s.hi_ = static_cast<double>(hi);
    return s;
  }

  Kind kind() const { return kind_; }
  double lo() const { return lo_; }
  double hi() const { return hi_; }
  const std::vector<double>& values() const { return values_; }

  /// True exactly for Reals, NonnegReals, Interval, and singleton
  /// FiniteSet / IntegerRange.
  bool is_convex() const;

  /// Number of elements when the set is finite, 0 otherwise.
  std::int64_t cardinality() const;

  bool hull_bounded() const;
  double hull_min() const;  // only meaningful when hull_bounded()
  double hull_max() const;

  /// Internal consistency problems, empty when well formed.
  std::vector<std::string> violations() const;

  std::string describe() const;

 private:
  explicit ConstraintSet(Kind kind) : kind_(kind) {}

  Kind kind_;
  double lo_ = 0.0;
  double hi_ = 0.0;
  std::vector<double> values_;
};

}  // namespace ncadmm
