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
#include <map>
#include <string>
#include <vector>

#include <Eigen/Dense>

#include "ncadmm/problem.hpp"

namespace ncadmm {

/// Canonical coordinate indices of each named physical variable group.
using IndexMap = std::map<std::string, std::vector<Eigen::Index>>;

// ---------------------------------------------------------------------------
// Random mixed-Boolean QP
// ---------------------------------------------------------------------------

struct MiqpInstance {
  Problem problem;
  Eigen::VectorXd x_feasible;  // witness used to build b, so Ax = b exactly
};

/// P = QQ' with standard normal Q, q and A standard normal, b = A x0 for a
/// random x0 drawn from the constraint product (so the instance is feasible),
/// and r chosen so the unconstrained minimum of the quadratic is zero. The
/// first n_bool coordinates are {0,1}, the next n_nonneg are half-lines, the
/// rest are free.
MiqpInstance gen_random_miqp(Eigen::Index n, Eigen::Index m, Eigen::Index n_bool,
                             Eigen::Index n_nonneg, std::uint64_t seed);

// ---------------------------------------------------------------------------
// Hybrid vehicle power split
// ---------------------------------------------------------------------------

struct VehicleParams {
  double alpha = 1.0;   // fuel / power^2
  double beta = 10.0;   // fuel / power
  double gamma = 1.5;   // fuel per engine-on step
  double delta = 10.0;  // turn-on cost
  double eta = 0.1;     // terminal energy penalty
  double tau = 5.0;     // time step
  double p_max = 1.0;
  double e_max = 200.0;
  double e0 = 200.0;
  int z_init = 0;
  int horizon = 4;        // T
  Eigen::VectorXd demand;  // length T; leave empty to use synthetic_demand
};

struct VehicleInstance {
  Problem problem;
  IndexMap index_map;  // P_batt, P_eng, z, E, s, c, w, h (each length T)
  Eigen::VectorXd witness;
  Eigen::VectorXd demand;
};

/// Canonical form of the engine/battery power split:
/// per step t the equalities are
///   E_{t+1} - E_t + tau P_batt_t              = 0   (E_0 folded into b)
///   P_batt_t + P_eng_t - s_t                  = demand_t
///   P_eng_t - p_max z_t + c_t                 = 0
///   z_t - z_{t-1} - w_t + h_t                 = 0   (z_{-1} folded into b)
/// with slacks s, c, h >= 0 and the hinge epigraph w >= 0 carrying the
/// turn-on cost. E stays in [0, e_max], P_eng in [0, p_max], z in {0,1}.
VehicleInstance gen_hybrid_vehicle(const VehicleParams& vp);

/// Two seeded sinusoids plus clipped noise, |demand| <= 2 p_max.
Eigen::VectorXd synthetic_demand(int horizon, double p_max, std::uint64_t seed);

// ---------------------------------------------------------------------------
// Switched-mode power converter
// ---------------------------------------------------------------------------

struct ConverterParams {
  double l1 = 10e-6;   // H
  double c1 = 1e-6;    // F
  double l2 = 10e-6;   // H
  double c2 = 10e-6;   // F
  double r_load = 1.0; // Ohm (may be +inf for the lossless case)
  double v_dc = 10.0;  // V
  double h = 0.5e-6;   // discretization interval, s
  int horizon = 100;   // T
  double lambda = 1.5; // switching penalty, V^2
  double mu = 0.1;     // pull toward the least-squares trajectory
  Eigen::VectorXd v_des;  // length T+1; leave empty for 5 sin(2 pi t / T)
};

struct CircuitDynamics {
  Eigen::Matrix4d G;
  Eigen::Vector4d H;
};

/// Zero-order-hold discretization of the converter state (i1, v1, c1 current
/// balance, output RC) via the augmented-matrix exponential, so no explicit
/// inverse of the continuous dynamics is formed.
CircuitDynamics circuit_dynamics(const ConverterParams& cp);

struct ConverterInstance {
  Problem problem;
  IndexMap index_map;  // i1, v1, i2, v2 (length T+1), u, a, p, n (length T)
  CircuitDynamics dynamics;
  int horizon;
  Eigen::VectorXd v_des;
  Eigen::VectorXd xi_ls;    // stacked 4(T+1) least-squares trajectory
  Eigen::VectorXd witness;  // the u = 0 switch sequence, extended
};

/// Periodic tracking problem: states chained by xi_{t+1} = G xi_t + H u_t,
/// xi_0 = xi_T, u_t in {-1, 0, 1}, absolute switching differences modeled by
/// epigraph variables a_t with nonnegative slacks p_t, n_t (differences taken
/// cyclically). The objective tracks v_des on the output voltage, penalizes
/// switching with weight lambda, and regularizes toward the least-squares
/// trajectory with weight mu.
ConverterInstance gen_power_converter(const ConverterParams& cp);

/// The unique feasible point induced by a switch sequence (length T, values
/// in {-1,0,1}): the periodic state trajectory plus tight slack values.
Eigen::VectorXd extend_switch_sequence(const ConverterInstance& inst, const Eigen::VectorXd& u);

// ---------------------------------------------------------------------------
// MIMO signal decoding
// ---------------------------------------------------------------------------

struct DecodeInstance {
  Problem problem;  // P = 2 H'H, q = -2 H'y, r = |y|^2, no equalities
  Eigen::MatrixXd channel;
  Eigen::VectorXd x_true;
  Eigen::VectorXd y;
};

/// Maximum-likelihood decoding over the constellation {-3,-1,1,3}: standard
/// normal channel, uniform symbols, additive white noise with variance
/// 5 n / 10^(snr_db/10) (per-received-component average signal power over
/// noise variance, in dB). Requires p_dim >= n.
DecodeInstance gen_signal_decode(Eigen::Index n, Eigen::Index p_dim, double snr_db,
                                 std::uint64_t seed);

/// Fraction of differing bits under the Gray labeling
/// -3 -> 00, -1 -> 01, 1 -> 11, 3 -> 10 (two bits per symbol).
/// Throws if any entry is not a constellation point.
double bit_error_rate(const Eigen::VectorXd& x_hat, const Eigen::VectorXd& x_true);

}  // namespace ncadmm
