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

#include "ncadmm/oracle.hpp"

#include <memory>
#include <stdexcept>
#include <vector>

#include "ncadmm/admm.hpp"
#include "ncadmm/kkt.hpp"
#include "ncadmm/projections.hpp"

namespace ncadmm {

namespace {

constexpr double kOracleFeasTol = 1e-7;
constexpr double kSubproblemTol = 1e-9;
constexpr std::int64_t kSubproblemMaxIters = 20000;

bool is_discrete(const ConstraintSet& s) {
  return s.kind() == ConstraintSet::Kind::kFiniteSet ||
         s.kind() == ConstraintSet::Kind::kIntegerRange;
}

double discrete_value(const ConstraintSet& s, std::int64_t j) {
  if (s.kind() == ConstraintSet::Kind::kFiniteSet)
    return s.values()[static_cast<std::size_t>(j)];
  return s.lo() + static_cast<double>(j);
}

}  // namespace

OracleResult enumerate_solve(const Problem& p, std::int64_t combination_cap) {
  std::vector<Eigen::Index> discrete_idx;
  std::vector<std::int64_t> cardinality;
  std::int64_t total = 1;
  for (Eigen::Index i = 0; i < p.n(); ++i) {
    const ConstraintSet& s = p.sets[static_cast<std::size_t>(i)];
    if (!is_discrete(s)) continue;
    discrete_idx.push_back(i);
    const std::int64_t card = s.cardinality();
    cardinality.push_back(card);
    if (total > combination_cap / std::max<std::int64_t>(card, 1))
      throw std::runtime_error("enumerate_solve: combination cap exceeded");
    total *= card;
  }
  if (total > combination_cap)
    throw std::runtime_error("enumerate_solve: combination cap exceeded");

  const Eigen::Index nd = static_cast<Eigen::Index>(discrete_idx.size());
  OracleResult best;
  best.combinations = total;

  // Structure shared by all assignments; only q, b, r of the subproblem vary.
  Eigen::VectorXd assignment_values(nd);
  std::vector<std::int64_t> odometer(static_cast<std::size_t>(nd), 0);

  bool all_free_reals = true;
  {
    for (Eigen::Index i = 0; i < p.n(); ++i) {
      const ConstraintSet& s = p.sets[static_cast<std::size_t>(i)];
      if (!is_discrete(s) && s.kind() != ConstraintSet::Kind::kReals) all_free_reals = false;
    }
  }

  std::unique_ptr<EqualityQpSolver> direct;
  std::unique_ptr<KktFactorization> sub_fac;
  Scaling sub_scaling;
  double sub_cost_scale = 0.0;
  const double sub_rho = 2.0;

  for (std::int64_t a = 0; a < total; ++a) {
    for (Eigen::Index k = 0; k < nd; ++k) {
      assignment_values(k) = discrete_value(
          p.sets[static_cast<std::size_t>(discrete_idx[static_cast<std::size_t>(k)])],
          odometer[static_cast<std::size_t>(k)]);
    }
    // Advance the odometer, last coordinate fastest, for lexicographic order.
    for (Eigen::Index k = nd - 1; k >= 0; --k) {
      if (++odometer[static_cast<std::size_t>(k)] < cardinality[static_cast<std::size_t>(k)]) break;
      odometer[static_cast<std::size_t>(k)] = 0;
    }

    FrozenProblem fp = freeze_coordinates(p, discrete_idx, assignment_values);
    Eigen::VectorXd full;
    if (fp.free_idx.empty()) {
      full = fp.expand(Eigen::VectorXd(0));
    } else if (all_free_reals) {
      if (!direct) direct = std::make_unique<EqualityQpSolver>(fp.sub.P, fp.sub.A);
      const auto sol = direct->solve(fp.sub.q, fp.sub.b);
      if (!sol) continue;
      full = fp.expand(*sol);
    } else {
      // The cost normalization constant and the factorization depend only on
      // the frozen index structure, so both are shared by every assignment.
      if (sub_cost_scale == 0.0) sub_cost_scale = cost_normalization(fp.sub);
      fp.sub.P *= sub_cost_scale;
      fp.sub.q *= sub_cost_scale;
      fp.sub.r *= sub_cost_scale;
      if (!sub_fac) {
        sub_scaling = compute_scaling(fp.sub, PreconditionMode::kRowL2);
        sub_fac = std::make_unique<KktFactorization>(
            factor_kkt(assemble_kkt(fp.sub.P, fp.sub.A, sub_scaling, sub_rho), fp.sub.n(),
                       fp.sub.m(), 0, sub_rho));
      }
      const Eigen::VectorXd x0 =
          project(fp.sub.sets, Eigen::VectorXd::Zero(fp.sub.n()));
      const ConvexSolveResult res =
          solve_convex(fp.sub, sub_scaling, *sub_fac, x0, kSubproblemTol, kSubproblemMaxIters);
      if (!res.x.allFinite()) continue;
      full = fp.expand(res.x);
    }

    if (residual(p, full) > kOracleFeasTol) continue;
    const double obj = objective(p, full);
    if (obj < best.objective) {
      best.objective = obj;
      best.x = full;
      best.feasible = true;
    }
  }

  if (!best.feasible) best.objective = std::numeric_limits<double>::infinity();
  return best;
}

double optimality_gap(const Problem& p, const Eigen::VectorXd& x_heuristic,
                      const OracleResult& oracle) {
  if (!oracle.feasible) throw std::invalid_argument("optimality_gap: oracle result infeasible");
  if (membership_distance(p, x_heuristic) > 1e-9)
    throw std::invalid_argument("optimality_gap: heuristic point leaves the constraint sets");
  const double f_heur = objective(p, x_heuristic);
  const double gap = (f_heur - oracle.objective) / std::max(1.0, std::abs(oracle.objective));
  if (gap < -1e-9)
    throw std::logic_error("optimality_gap: heuristic beats the global optimum");
  return gap;
}

}  // namespace ncadmm
