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

#include "ncadmm/scaling.hpp"

#include <stdexcept>

namespace ncadmm {

Scaling compute_scaling(const Problem& p, PreconditionMode mode) {
  const Eigen::Index m = p.m();
  const Eigen::Index n = p.n();
  Scaling s = Scaling::identity(m, n);
  if (mode == PreconditionMode::kNone) return s;
  for (Eigen::Index i = 0; i < m; ++i) {
    const double norm = mode == PreconditionMode::kRowL1 ? p.A.row(i).lpNorm<1>()
                                                         : p.A.row(i).norm();
    if (norm > 0.0) s.e(i) = 1.0 / norm;
  }
  return s;
}

double effective_condition_number(const Eigen::MatrixXd& M) {
  if (M.rows() != M.cols()) throw std::invalid_argument("matrix must be square");
  Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> es(M, Eigen::EigenvaluesOnly);
  const Eigen::VectorXd sigma = es.eigenvalues().cwiseAbs();
  const double sigma_max = sigma.maxCoeff();
  if (sigma_max == 0.0) throw std::invalid_argument("zero matrix has no condition number");
  double sigma_min = sigma_max;
  for (Eigen::Index i = 0; i < sigma.size(); ++i) {
    if (sigma(i) > 1e-12 * sigma_max) sigma_min = std::min(sigma_min, sigma(i));
  }
  return sigma_max / sigma_min;
}

}  // namespace ncadmm
