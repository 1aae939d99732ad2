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

#include "ncadmm/constraint_set.hpp"

#include <cmath>
#include <sstream>

namespace ncadmm {

bool ConstraintSet::is_convex() const {
  switch (kind_) {
    case Kind::kReals:
    case Kind::kNonnegReals:
    case Kind::kInterval:
      return true;
    case Kind::kFiniteSet:
      return values_.size() == 1;
    case Kind::kIntegerRange:
      return lo_ == hi_;
  }
  return false;
}

std::int64_t ConstraintSet::cardinality() const {
  switch (kind_) {
    case Kind::kFiniteSet:
      return static_cast<std::int64_t>(values_.size());
    case Kind::kIntegerRange:
      return static_cast<std::int64_t>(hi_ - lo_) + 1;
    case Kind::kInterval:
      return lo_ == hi_ ? 1 : 0;
    default:
      return 0;
  }
}

bool ConstraintSet::hull_bounded() const {
  switch (kind_) {
    case Kind::kInterval:
    case Kind::kFiniteSet:
    case Kind::kIntegerRange:
      return true;
    default:
      return false;
  }
}

double ConstraintSet::hull_min() const {
  return kind_ == Kind::kFiniteSet ? values_.front() : lo_;
}

double ConstraintSet::hull_max() const {
  return kind_ == Kind::kFiniteSet ? values_.back() : hi_;
}

std::vector<std::string> ConstraintSet::violations() const {
  std::vector<std::string> out;
  switch (kind_) {
    case Kind::kReals:
    case Kind::kNonnegReals:
      break;
    case Kind::kInterval:
      if (!std::isfinite(lo_) || !std::isfinite(hi_)) out.push_back("interval bound not finite");
      if (lo_ > hi_) out.push_back("interval lo > hi");
      break;
    case Kind::kFiniteSet:
      if (values_.empty()) {
        out.push_back("finite set is empty");
        break;
      }
      for (std::size_t i = 0; i < values_.size(); ++i) {
        if (!std::isfinite(values_[i])) {
          out.push_back("finite set value not finite");
          break;
        }
      }
      for (std::size_t i = 1; i < values_.size(); ++i) {
        if (values_[i] <= values_[i - 1]) {
          out.push_back("finite set values not strictly increasing");
          break;
        }
      }
      break;
    case Kind::kIntegerRange:
      if (lo_ != std::floor(lo_) || hi_ != std::floor(hi_))
        out.push_back("integer range bound not integral");
      if (lo_ > hi_) out.push_back("integer range lo > hi");
      break;
  }
  return out;
}

std::string ConstraintSet::describe() const {
  std::ostringstream os;
  switch (kind_) {
    case Kind::kReals:
      os << "R";
      break;
    case Kind::kNonnegReals:
      os << "R+";
      break;
    case Kind::kInterval:
      os << "[" << lo_ << ", " << hi_ << "]";
      break;
    case Kind::kFiniteSet:
      os << "{";
      for (std::size_t i = 0; i < values_.size(); ++i) os << (i ? ", " : "") << values_[i];
      os << "}";
      break;
    case Kind::kIntegerRange:
      os << "{" << lo_ << ", ..., " << hi_ << "}";
      break;
  }
  return os.str();
}

}  // namespace ncadmm
