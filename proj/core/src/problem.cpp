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

#include "ncadmm/problem.hpp"

#include <cmath>
#include <sstream>
#include <stdexcept>

#include "ncadmm/projections.hpp"

namespace ncadmm {

namespace {

void require_dims(const Problem& p, const Eigen::VectorXd& x) {
  if (x.size() != p.n()) throw std::invalid_argument("point dimension does not match problem");
}

}  // namespace

std::vector<std::string> validate(const Problem& p) {
  std::vector<std::string> out;
  const Eigen::Index n = p.n();
  const Eigen::Index m = p.A.rows();

  if (p.P.rows() != n || p.P.cols() != n) {
    std::ostringstream os;
    os << "P is " << p.P.rows() << "x" << p.P.cols() << ", expected " << n << "x" << n;
    out.push_back(os.str());
  }
  if (m > 0 && p.A.cols() != n) {
    std::ostringstream os;
    os << "A has " << p.A.cols() << " columns, expected " << n;
    out.push_back(os.str());
  }
  if (p.b.size() != m) {
    std::ostringstream os;
    os << "b has length " << p.b.size() << ", expected " << m;
    out.push_back(os.str());
  }
  if (static_cast<Eigen::Index>(p.sets.size()) != n) {
    std::ostringstream os;
    os << "sets length " << p.sets.size() << " != n = " << n;
    out.push_back(os.str());
  }

  if (!p.P.allFinite()) out.push_back("P has non-finite entries");
  if (!p.q.allFinite()) out.push_back("q has non-finite entries");
  if (!p.A.allFinite()) out.push_back("A has non-finite entries");
  if (!p.b.allFinite()) out.push_back("b has non-finite entries");
  if (!std::isfinite(p.r)) out.push_back("r is not finite");

  // Symmetry and PSD checks only make sense on a square, finite P.
  if (p.P.rows() == n && p.P.cols() == n && n > 0 && p.P.allFinite()) {
    const double scale = std::max(1.0, p.P.cwiseAbs().maxCoeff());
    const double asym = (p.P - p.P.transpose()).cwiseAbs().maxCoeff();
    if (asym > 1e-10 * scale) {
      out.push_back("P not symmetric");
    } else {
      Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> es(p.P, Eigen::EigenvaluesOnly);
      const double lo = es.eigenvalues().minCoeff();
      const double norm = es.eigenvalues().cwiseAbs().maxCoeff();
      if (lo < -1e-8 * std::max(1.0, norm)) out.push_back("P not PSD");
    }
  }

  for (std::size_t i = 0; i < p.sets.size(); ++i) {
    for (const std::string& v : p.sets[i].violations()) {
      std::ostringstream os;
      os << "set " << i << ": " << v;
      out.push_back(os.str());
    }
  }

  // A structurally void row can never be satisfied with b_i != 0.
  if (m > 0 && p.A.cols() == n && p.b.size() == m) {
    for (Eigen::Index i = 0; i < m; ++i) {
      if (p.A.row(i).cwiseAbs().maxCoeff() == 0.0 && p.b(i) != 0.0) {
        std::ostringstream os;
        os << "row " << i << " of A is zero but b(" << i << ") != 0 (infeasible)";
        out.push_back(os.str());
      }
    }
  }

  return out;
}

double objective(const Problem& p, const Eigen::VectorXd& x) {
  require_dims(p, x);
  return 0.5 * x.dot(p.P * x) + p.q.dot(x) + p.r;
}

double residual(const Problem& p, const Eigen::VectorXd& x) {
  require_dims(p, x);
  if (p.m() == 0) return 0.0;
  return (p.A * x - p.b).norm();
}

double membership_distance(const Problem& p, const Eigen::VectorXd& x) {
  require_dims(p, x);
  double worst = 0.0;
  for (Eigen::Index i = 0; i < p.n(); ++i) {
    const double d = std::abs(x(i) - project_coord(p.sets[static_cast<std::size_t>(i)], x(i)));
    worst = std::max(worst, d);
  }
  return worst;
}

Eigen::VectorXd FrozenProblem::expand(const Eigen::VectorXd& free_values) const {
  if (free_values.size() != static_cast<Eigen::Index>(free_idx.size()))
    throw std::invalid_argument("expand: free value count mismatch");
  Eigen::VectorXd full(static_cast<Eigen::Index>(free_idx.size() + frozen_idx.size()));
  for (std::size_t k = 0; k < frozen_idx.size(); ++k)
    full(frozen_idx[k]) = frozen_values(static_cast<Eigen::Index>(k));
  for (std::size_t k = 0; k < free_idx.size(); ++k)
    full(free_idx[k]) = free_values(static_cast<Eigen::Index>(k));
  return full;
}

FrozenProblem freeze_coordinates(const Problem& p, const std::vector<Eigen::Index>& frozen_idx,
                                 const Eigen::VectorXd& frozen_values) {
  const Eigen::Index n = p.n();
  if (static_cast<Eigen::Index>(frozen_idx.size()) != frozen_values.size())
    throw std::invalid_argument("freeze_coordinates: index/value count mismatch");
  for (std::size_t k = 0; k < frozen_idx.size(); ++k) {
    if (frozen_idx[k] < 0 || frozen_idx[k] >= n)
      throw std::invalid_argument("freeze_coordinates: index out of range");
    if (k > 0 && frozen_idx[k] <= frozen_idx[k - 1])
      throw std::invalid_argument("freeze_coordinates: indices must be ascending");
  }

  FrozenProblem out;
  out.frozen_idx = frozen_idx;
  out.frozen_values = frozen_values;
  std::vector<bool> is_frozen(static_cast<std::size_t>(n), false);
  for (const Eigen::Index i : frozen_idx) is_frozen[static_cast<std::size_t>(i)] = true;
  for (Eigen::Index i = 0; i < n; ++i)
    if (!is_frozen[static_cast<std::size_t>(i)]) out.free_idx.push_back(i);

  const Eigen::Index nf = static_cast<Eigen::Index>(out.free_idx.size());
  const Eigen::Index nz = static_cast<Eigen::Index>(frozen_idx.size());
  const Eigen::Index m = p.m();

  Problem& sub = out.sub;
  sub.P.resize(nf, nf);
  sub.q.resize(nf);
  sub.A.resize(m, nf);
  sub.b = p.b;
  sub.sets.reserve(static_cast<std::size_t>(nf));

  Eigen::MatrixXd P_ff(nf, nz);  // coupling block between free and frozen
  for (Eigen::Index i = 0; i < nf; ++i) {
    const Eigen::Index fi = out.free_idx[static_cast<std::size_t>(i)];
    for (Eigen::Index j = 0; j < nf; ++j) sub.P(i, j) = p.P(fi, out.free_idx[static_cast<std::size_t>(j)]);
    for (Eigen::Index j = 0; j < nz; ++j) P_ff(i, j) = p.P(fi, frozen_idx[static_cast<std::size_t>(j)]);
    if (m > 0) sub.A.col(i) = p.A.col(fi);
    sub.sets.push_back(p.sets[static_cast<std::size_t>(fi)]);
  }

  Eigen::VectorXd q_frozen(nz);
  Eigen::MatrixXd P_zz(nz, nz);
  for (Eigen::Index i = 0; i < nz; ++i) {
    q_frozen(i) = p.q(frozen_idx[static_cast<std::size_t>(i)]);
    for (Eigen::Index j = 0; j < nz; ++j)
      P_zz(i, j) = p.P(frozen_idx[static_cast<std::size_t>(i)], frozen_idx[static_cast<std::size_t>(j)]);
  }

  for (Eigen::Index i = 0; i < nf; ++i)
    sub.q(i) = p.q(out.free_idx[static_cast<std::size_t>(i)]);
  sub.q.noalias() += P_ff * frozen_values;
  sub.r = p.r + 0.5 * frozen_values.dot(P_zz * frozen_values) + q_frozen.dot(frozen_values);
  if (m > 0) {
    for (Eigen::Index j = 0; j < nz; ++j)
      sub.b -= p.A.col(frozen_idx[static_cast<std::size_t>(j)]) * frozen_values(j);
  }
  return out;
}

}  // namespace ncadmm
