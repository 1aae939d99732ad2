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
#include <optional>

#include <Eigen/Dense>

#include "ncadmm/scaling.hpp"

namespace ncadmm {

/// Unpivoted LDL' factorization of the quasi-definite saddle matrix
///
///   [ P + rho F^2   A'E        ]
///   [ EA            -(1/rho) I ]
///
/// in natural order. Quasi-definiteness (P PSD, rho > 0) guarantees the
/// factorization exists without pivoting, with exactly n positive and m
/// negative pivots. The factorization is immutable after construction;
/// concurrent solves against one instance are safe.
class KktFactorization {
 public:
  Eigen::Index n() const { return n_; }
  Eigen::Index m() const { return m_; }
  Eigen::Index size() const { return storage_.rows(); }
  double rho() const { return rho_; }

  /// Hash of (P, A, e, f, rho) identifying when reuse is valid.
  std::uint64_t fingerprint() const { return fingerprint_; }

  Eigen::VectorXd pivots() const { return storage_.diagonal(); }
  Eigen::Index positive_pivots() const { return positive_pivots_; }
  Eigen::Index negative_pivots() const { return size() - positive_pivots_; }

  /// L with unit diagonal, dense. Test/diagnostic convenience.
  Eigen::MatrixXd unit_lower() const;

  /// L diag(d) L'; should match the assembled matrix.
  Eigen::MatrixXd reconstruct() const;

  friend KktFactorization factor_kkt(const Eigen::MatrixXd& K, Eigen::Index n, Eigen::Index m,
                                     std::uint64_t fingerprint, double rho);
  friend Eigen::VectorXd solve_kkt(const KktFactorization& fac, const Eigen::VectorXd& rhs);
  friend void solve_kkt_in_place(const KktFactorization& fac, Eigen::VectorXd& rhs);

 private:
  Eigen::Index n_ = 0;
  Eigen::Index m_ = 0;
  double rho_ = 0.0;
  std::uint64_t fingerprint_ = 0;
  Eigen::Index positive_pivots_ = 0;
  // Strict lower triangle holds L, the diagonal holds d.
  Eigen::MatrixXd storage_;
};

/// The saddle matrix above, dense. With m = 0 this is just P + rho F^2.
/// Throws if rho <= 0 or dimensions are inconsistent.
Eigen::MatrixXd assemble_kkt(const Eigen::MatrixXd& P, const Eigen::MatrixXd& A,
                             const Scaling& scaling, double rho);

/// Unpivoted LDL' of a symmetric K whose leading n-block carries positive and
/// trailing m-block negative pivots. Increments the global factorization
/// counter. Throws "numerically singular KKT" when a pivot falls below
/// 1e-12 * max|K| (rho too small or degenerate data).
KktFactorization factor_kkt(const Eigen::MatrixXd& K, Eigen::Index n, Eigen::Index m,
                            std::uint64_t fingerprint = 0, double rho = 0.0);

/// Forward/diagonal/backward substitution.
Eigen::VectorXd solve_kkt(const KktFactorization& fac, const Eigen::VectorXd& rhs);
void solve_kkt_in_place(const KktFactorization& fac, Eigen::VectorXd& rhs);

/// Minimizer of (1/2)x'Px + q'x subject to Ax = b, via the epsilon-regularized
/// saddle system with one step of iterative refinement. Empty when the refined
/// residual exceeds 1e-6 (inconsistent constraints or severe degeneracy).
std::optional<Eigen::VectorXd> solve_equality_qp(const Eigen::MatrixXd& P,
                                                 const Eigen::VectorXd& q,
                                                 const Eigen::MatrixXd& A,
                                                 const Eigen::VectorXd& b);

/// Factor-once variant of solve_equality_qp for many (q, b) against fixed
/// (P, A); the regularized saddle matrix does not depend on the right-hand
/// side, so enumeration-style callers pay for one factorization.
class EqualityQpSolver {
 public:
  EqualityQpSolver(Eigen::MatrixXd P, Eigen::MatrixXd A);

  std::optional<Eigen::VectorXd> solve(const Eigen::VectorXd& q, const Eigen::VectorXd& b) const;

  Eigen::Index n() const { return n_; }
  Eigen::Index m() const { return m_; }

 private:
  Eigen::Index n_;
  Eigen::Index m_;
  Eigen::MatrixXd P_;
  Eigen::MatrixXd A_;
  KktFactorization fac_;
};

/// Cache key for (P, A, e, f, rho); q and b deliberately excluded so
/// instances differing only in the linear data share a factorization.
std::uint64_t kkt_fingerprint(const Eigen::MatrixXd& P, const Eigen::MatrixXd& A,
                              const Scaling& scaling, double rho);

/// Monotone process-wide count of factor_kkt calls, observable so caching
/// behavior can be asserted.
std::int64_t factorization_count();

}  // namespace ncadmm
