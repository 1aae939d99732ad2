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

#include "ncadmm/kkt.hpp"

#include <atomic>
#include <cstring>
#include <stdexcept>

namespace ncadmm {

namespace {

std::atomic<std::int64_t> g_factorizations{0};

constexpr double kEqualityQpReg = 1e-9;
constexpr double kEqualityQpResidualTol = 1e-6;

std::uint64_t fnv1a(const void* data, std::size_t len, std::uint64_t h) {
  const auto* bytes = static_cast<const unsigned char*>(data);
  for (std::size_t i = 0; i < len; ++i) {
    h ^= bytes[i];
    h *= 0x100000001b3ULL;
  }
  return h;
}

std::uint64_t hash_doubles(const double* data, std::size_t count, std::uint64_t h) {
  return fnv1a(data, count * sizeof(double), h);
}

}  // namespace

Eigen::MatrixXd KktFactorization::unit_lower() const {
  Eigen::MatrixXd L = Eigen::MatrixXd::Identity(size(), size());
  L.triangularView<Eigen::StrictlyLower>() = storage_.triangularView<Eigen::StrictlyLower>();
  return L;
}

Eigen::MatrixXd KktFactorization::reconstruct() const {
  const Eigen::MatrixXd L = unit_lower();
  return L * storage_.diagonal().asDiagonal() * L.transpose();
}

Eigen::MatrixXd assemble_kkt(const Eigen::MatrixXd& P, const Eigen::MatrixXd& A,
                             const Scaling& scaling, double rho) {
  if (rho <= 0.0) throw std::invalid_argument("assemble_kkt: rho must be positive");
  const Eigen::Index n = P.rows();
  const Eigen::Index m = A.rows();
  if (P.cols() != n) throw std::invalid_argument("assemble_kkt: P not square");
  if (m > 0 && A.cols() != n) throw std::invalid_argument("assemble_kkt: A column mismatch");
  if (scaling.f.size() != n || scaling.e.size() != m)
    throw std::invalid_argument("assemble_kkt: scaling dimension mismatch");

  Eigen::MatrixXd K(n + m, n + m);
  K.topLeftCorner(n, n) = P;
  K.topLeftCorner(n, n).diagonal() += rho * scaling.f.array().square().matrix();
  if (m > 0) {
    const Eigen::MatrixXd EA = scaling.e.asDiagonal() * A;
    K.bottomLeftCorner(m, n) = EA;
    K.topRightCorner(n, m) = EA.transpose();
    K.bottomRightCorner(m, m).setZero();
    K.bottomRightCorner(m, m).diagonal().setConstant(-1.0 / rho);
  }
  return K;
}

KktFactorization factor_kkt(const Eigen::MatrixXd& K, Eigen::Index n, Eigen::Index m,
                            std::uint64_t fingerprint, double rho) {
  const Eigen::Index N = K.rows();
  if (K.cols() != N) throw std::invalid_argument("factor_kkt: matrix not square");
  if (n + m != N) throw std::invalid_argument("factor_kkt: n + m does not match matrix size");

  g_factorizations.fetch_add(1, std::memory_order_relaxed);

  const double max_abs = N > 0 ? K.cwiseAbs().maxCoeff() : 0.0;
  if (N > 0 && max_abs == 0.0) throw std::runtime_error("numerically singular KKT: zero matrix");
  const double pivot_floor = 1e-12 * max_abs;

  KktFactorization fac;
  fac.n_ = n;
  fac.m_ = m;
  fac.rho_ = rho;
  fac.fingerprint_ = fingerprint;
  fac.storage_ = K;

  Eigen::MatrixXd& W = fac.storage_;
  Eigen::VectorXd work(N);
  Eigen::Index positives = 0;
  for (Eigen::Index k = 0; k < N; ++k) {
    const Eigen::Index rs = N - k - 1;
    if (k > 0) {
      work.head(k) = W.diagonal().head(k).cwiseProduct(W.row(k).head(k).transpose());
      W(k, k) -= W.row(k).head(k).dot(work.head(k));
      if (rs > 0) W.col(k).tail(rs).noalias() -= W.block(k + 1, 0, rs, k) * work.head(k);
    }
    const double pivot = W(k, k);
    if (std::abs(pivot) < pivot_floor)
      throw std::runtime_error("numerically singular KKT (pivot " + std::to_string(k) + ")");
    if (pivot > 0.0) ++positives;
    if (rs > 0) W.col(k).tail(rs) /= pivot;
  }
  fac.positive_pivots_ = positives;
  return fac;
}

void solve_kkt_in_place(const KktFactorization& fac, Eigen::VectorXd& rhs) {
  if (rhs.size() != fac.size()) throw std::invalid_argument("solve_kkt: rhs dimension mismatch");
  const Eigen::MatrixXd& W = fac.storage_;
  W.triangularView<Eigen::UnitLower>().solveInPlace(rhs);
  rhs.array() /= W.diagonal().array();
  W.triangularView<Eigen::UnitLower>().transpose().solveInPlace(rhs);
}

Eigen::VectorXd solve_kkt(const KktFactorization& fac, const Eigen::VectorXd& rhs) {
  Eigen::VectorXd sol = rhs;
  solve_kkt_in_place(fac, sol);
  return sol;
}

EqualityQpSolver::EqualityQpSolver(Eigen::MatrixXd P, Eigen::MatrixXd A)
    : n_(P.rows()), m_(A.rows()), P_(std::move(P)), A_(std::move(A)) {
  if (P_.cols() != n_) throw std::invalid_argument("EqualityQpSolver: P not square");
  if (m_ > 0 && A_.cols() != n_) throw std::invalid_argument("EqualityQpSolver: A column mismatch");

  // [P + eps I, A'; A, -eps I] is quasi-definite even when P is singular or
  // A has dependent rows, unlike the plain saddle matrix.
  Eigen::MatrixXd K(n_ + m_, n_ + m_);
  K.topLeftCorner(n_, n_) = P_;
  K.topLeftCorner(n_, n_).diagonal().array() += kEqualityQpReg;
  if (m_ > 0) {
    K.bottomLeftCorner(m_, n_) = A_;
    K.topRightCorner(n_, m_) = A_.transpose();
    K.bottomRightCorner(m_, m_).setZero();
    K.bottomRightCorner(m_, m_).diagonal().setConstant(-kEqualityQpReg);
  }
  fac_ = factor_kkt(K, n_, m_);
}

std::optional<Eigen::VectorXd> EqualityQpSolver::solve(const Eigen::VectorXd& q,
                                                       const Eigen::VectorXd& b) const {
  if (q.size() != n_ || b.size() != m_)
    throw std::invalid_argument("EqualityQpSolver: rhs dimension mismatch");

  Eigen::VectorXd rhs(n_ + m_);
  rhs.head(n_) = -q;
  rhs.tail(m_) = b;

  const auto true_kkt_apply = [&](const Eigen::VectorXd& v) {
    Eigen::VectorXd out(n_ + m_);
    out.head(n_).noalias() = P_ * v.head(n_);
    if (m_ > 0) {
      out.head(n_).noalias() += A_.transpose() * v.tail(m_);
      out.tail(m_).noalias() = A_ * v.head(n_);
    }
    return out;
  };

  Eigen::VectorXd sol = solve_kkt(fac_, rhs);
  // One refinement step against the unregularized system.
  Eigen::VectorXd residual_vec = rhs - true_kkt_apply(sol);
  sol += solve_kkt(fac_, residual_vec);

  const double rel = (rhs - true_kkt_apply(sol)).norm() / (1.0 + rhs.norm());
  if (rel > kEqualityQpResidualTol) return std::nullopt;
  return sol.head(n_);
}

std::optional<Eigen::VectorXd> solve_equality_qp(const Eigen::MatrixXd& P,
                                                 const Eigen::VectorXd& q,
                                                 const Eigen::MatrixXd& A,
                                                 const Eigen::VectorXd& b) {
  return EqualityQpSolver(P, A).solve(q, b);
}

std::uint64_t kkt_fingerprint(const Eigen::MatrixXd& P, const Eigen::MatrixXd& A,
                              const Scaling& scaling, double rho) {
  std::uint64_t h = 0xcbf29ce484222325ULL;
  const std::int64_t dims[2] = {P.rows(), A.rows()};
  h = fnv1a(dims, sizeof(dims), h);
  h = hash_doubles(&rho, 1, h);
  h = hash_doubles(P.data(), static_cast<std::size_t>(P.size()), h);
  h = hash_doubles(A.data(), static_cast<std::size_t>(A.size()), h);
  h = hash_doubles(scaling.e.data(), static_cast<std::size_t>(scaling.e.size()), h);
  h = hash_doubles(scaling.f.data(), static_cast<std::size_t>(scaling.f.size()), h);
  return h;
}

std::int64_t factorization_count() { return g_factorizations.load(std::memory_order_relaxed); }

}  // namespace ncadmm
