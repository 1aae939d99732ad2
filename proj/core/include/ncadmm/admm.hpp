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
#include <limits>
#include <optional>
#include <string_view>
#include <vector>

#include <Eigen/Dense>

#include "ncadmm/kkt.hpp"
#include "ncadmm/problem.hpp"
#include "ncadmm/scaling.hpp"

namespace ncadmm {

/// Which projected iterate enters the dual update. kStandard feeds the new
/// one (ordinary scaled ADMM ordering); kPreviousIterate feeds the previous
/// one. The two coincide at any fixed point; the second exists as a
/// comparison mode.
enum class DualUpdate { kStandard, kPreviousIterate };

struct Settings {
  double rho = 1.0;
  int iters_per_restart = 200;  // fixed per-restart budget, no early stopping
  int restarts = 10;
  double eps_tol = 1e-4;  // accepted affine feasibility, unscaled l2
  PreconditionMode precondition = PreconditionMode::kRowL2;
  std::uint64_t seed = 0;
  bool polish = false;
  bool trace = false;
  DualUpdate dual_update = DualUpdate::kStandard;
};

/// Tuned settings for the bundled example families:
/// "miqp", "vehicle", "converter", "decode". Throws on unknown names.
Settings preset_settings(std::string_view name);

struct IterState {
  Eigen::VectorXd x;       // projected iterate; in X after every full step
  Eigen::VectorXd u;       // scaled dual, size m + n
  Eigen::VectorXd x_half;  // pre-projection iterate
};

/// State for a fresh restart: x = x0, u = 0.
IterState initial_state(const Problem& p, const Eigen::VectorXd& x0);

/// One three-step update: KKT solve for the pre-projection iterate, projection
/// onto the constraint product, dual update. The factorization must match the
/// (P, A, scaling, rho) fingerprint of the current data.
IterState iterate(const IterState& state, const KktFactorization& fac, const Problem& p,
                  const Scaling& scaling, double rho,
                  DualUpdate mode = DualUpdate::kStandard);

struct TraceRow {
  int restart;
  int iter;  // 1-based within the restart
  double objective;
  double residual;
  double best_so_far;
};

struct RestartOutcome {
  std::optional<Eigen::VectorXd> best_x;
  double best_objective = std::numeric_limits<double>::infinity();
  double best_residual = std::numeric_limits<double>::infinity();
  std::int64_t iterations = 0;
  bool aborted = false;  // iterate left the representable range
  std::vector<TraceRow> trace;
};

/// Fixed budget of iterations from x0 (a point of the constraint hull) with
/// u = 0; every projected iterate is scored against eps_tol and the best
/// feasible one kept. Never stops early on convergence.
RestartOutcome run_single(const Problem& p, const Settings& settings,
                          const KktFactorization& fac, const Scaling& scaling,
                          const Eigen::VectorXd& x0, int restart_index = 0);

struct Solution {
  std::optional<Eigen::VectorXd> best_x;
  double best_objective = std::numeric_limits<double>::infinity();
  double best_residual = std::numeric_limits<double>::infinity();
  bool found_feasible = false;
  int restarts = 0;
  std::int64_t iterations = 0;      // engine iterations incl. polishing
  std::int64_t factorizations = 0;  // factorizations this call paid for
  double wall_ms = 0.0;
  double setup_ms = 0.0;  // scaling + assembly + factorization phase
  std::vector<TraceRow> trace;
};

/// Multi-start solver. Holds the last (P, A, scaling, rho) factorization, so
/// consecutive solves that differ only in q, b, and the constraint sets skip
/// the setup cost. Restarts draw from per-restart seed streams and may run
/// concurrently; results are reduced in restart order, so output does not
/// depend on the thread count.
class Solver {
 public:
  Solver() = default;

  /// Best feasible point across restarts; polishes it when requested.
  /// Throws std::invalid_argument when validate(p) reports violations.
  Solution solve(const Problem& p, const Settings& settings);

  /// Solves the convex-hull relaxation to tolerance 1e-7, projects the result
  /// onto the original sets, and reports that point whether or not it is
  /// feasible.
  Solution relax_and_round(const Problem& p, const Settings& settings);

 private:
  struct CacheEntry {
    std::uint64_t fingerprint = 0;
    Scaling scaling;
    KktFactorization fac;
  };

  // Returns the cached entry when fingerprints match, else factors.
  // `paid` reports whether a factorization was performed.
  const CacheEntry& setup(const Problem& p, const Settings& settings, bool& paid);

  std::optional<CacheEntry> cache_;
};

/// One-shot helpers (fresh Solver, no cross-call caching).
Solution solve(const Problem& p, const Settings& settings);
Solution relax_and_round(const Problem& p, const Settings& settings);

/// Fixes every nonconvex coordinate at x_i and re-solves the remaining convex
/// problem tightly (splitting residuals <= 1e-8 or 5000 iterations). Returns
/// the refined point only when it is eps_tol-feasible and improves the
/// objective; otherwise returns x unchanged. x must lie in the constraint
/// product.
Eigen::VectorXd polish(const Problem& p, const Eigen::VectorXd& x, double eps_tol = 1e-6);

struct ConvexSolveResult {
  Eigen::VectorXd x;
  std::int64_t iterations = 0;
  bool converged = false;
};

/// Scaled iteration with early stopping for problems whose sets are all
/// convex: stops when both the splitting primal residual and the dual
/// residual fall below tol. The factorization must match (p, scaling, rho =
/// fac.rho()). Exposed for reuse by enumeration-style callers that solve many
/// (q, b) variants against one factorization.
ConvexSolveResult solve_convex(const Problem& p, const Scaling& scaling,
                               const KktFactorization& fac, const Eigen::VectorXd& x0,
                               double tol, std::int64_t max_iters);

/// Convenience overload: computes the scaling and factorization itself.
ConvexSolveResult solve_convex(const Problem& p, double rho, PreconditionMode mode,
                               const Eigen::VectorXd& x0, double tol, std::int64_t max_iters);

/// The problem with every set replaced by its convex hull
/// (finite sets and integer ranges become intervals).
Problem convex_hull_problem(const Problem& p);

/// Factor applied to (P, q, r) before iterating: 1 / mean|diag P|, or 1 when
/// the diagonal vanishes. Minimizing the scaled cost is the same problem; the
/// normalization keeps rho meaningful across data scales, so the tuned preset
/// values transfer between problem families. Affine data, constraint sets,
/// reported objectives, and feasibility tests always use the original data.
double cost_normalization(const Problem& p);

}  // namespace ncadmm
