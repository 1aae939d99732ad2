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

#include "ncadmm/generators.hpp"

#include <cmath>
#include <stdexcept>

#include "ncadmm/kkt.hpp"
#include "ncadmm/rng.hpp"

namespace ncadmm {

namespace {

constexpr double kPi = 3.14159265358979323846;

// Scaling-and-squaring truncated series; the argument is halved until its
// inf-norm is below 1/2, so the series error is far below 1e-10.
Eigen::MatrixXd expm(const Eigen::MatrixXd& M) {
  const Eigen::Index n = M.rows();
  double norm = 0.0;
  for (Eigen::Index i = 0; i < n; ++i) norm = std::max(norm, M.row(i).cwiseAbs().sum());

  int squarings = 0;
  while (norm > 0.5) {
    norm *= 0.5;
    ++squarings;
  }
  const Eigen::MatrixXd T = M / std::pow(2.0, squarings);

  Eigen::MatrixXd result = Eigen::MatrixXd::Identity(n, n);
  Eigen::MatrixXd term = Eigen::MatrixXd::Identity(n, n);
  for (int k = 1; k <= 40; ++k) {
    term = (term * T) / static_cast<double>(k);
    result += term;
    if (term.cwiseAbs().maxCoeff() <= 1e-17 * result.cwiseAbs().maxCoeff()) break;
  }
  for (int i = 0; i < squarings; ++i) result = result * result;
  return result;
}

double normal_draw(std::mt19937_64& gen) { return rng::normal(gen); }

}  // namespace

// ---------------------------------------------------------------------------
// Random mixed-Boolean QP
// ---------------------------------------------------------------------------

MiqpInstance gen_random_miqp(Eigen::Index n, Eigen::Index m, Eigen::Index n_bool,
                             Eigen::Index n_nonneg, std::uint64_t seed) {
  if (n < 1) throw std::invalid_argument("gen_random_miqp: n >= 1 required");
  if (m < 0 || m > n) throw std::invalid_argument("gen_random_miqp: require 0 <= m <= n");
  if (n_bool < 0 || n_nonneg < 0 || n_bool + n_nonneg > n)
    throw std::invalid_argument("gen_random_miqp: require n_bool + n_nonneg <= n");

  std::mt19937_64 gen = rng::make_stream(seed, 0);

  Eigen::MatrixXd Q(n, n);
  for (Eigen::Index i = 0; i < n; ++i)
    for (Eigen::Index j = 0; j < n; ++j) Q(i, j) = normal_draw(gen);

  MiqpInstance inst;
  Problem& p = inst.problem;
  p.P = Q * Q.transpose();
  p.q.resize(n);
  for (Eigen::Index i = 0; i < n; ++i) p.q(i) = normal_draw(gen);
  p.A.resize(m, n);
  for (Eigen::Index i = 0; i < m; ++i)
    for (Eigen::Index j = 0; j < n; ++j) p.A(i, j) = normal_draw(gen);

  p.sets.reserve(static_cast<std::size_t>(n));
  for (Eigen::Index i = 0; i < n; ++i) {
    if (i < n_bool)
      p.sets.push_back(ConstraintSet::finite_set({0.0, 1.0}));
    else if (i < n_bool + n_nonneg)
      p.sets.push_back(ConstraintSet::nonneg_reals());
    else
      p.sets.push_back(ConstraintSet::reals());
  }

  Eigen::VectorXd x0(n);
  for (Eigen::Index i = 0; i < n; ++i) {
    if (i < n_bool)
      x0(i) = rng::uniform01(gen) < 0.5 ? 0.0 : 1.0;
    else if (i < n_bool + n_nonneg)
      x0(i) = std::abs(normal_draw(gen));
    else
      x0(i) = normal_draw(gen);
  }
  p.b = p.A * x0;
  inst.x_feasible = x0;

  // r makes the unconstrained minimum of the quadratic equal to zero; the
  // pseudo-solve keeps this well defined when Q is nearly singular.
  Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> es(p.P);
  const Eigen::VectorXd& lambda = es.eigenvalues();
  const double lambda_floor = 1e-12 * lambda.cwiseAbs().maxCoeff();
  Eigen::VectorXd inv_lambda = Eigen::VectorXd::Zero(n);
  for (Eigen::Index i = 0; i < n; ++i)
    if (lambda(i) > lambda_floor) inv_lambda(i) = 1.0 / lambda(i);
  const Eigen::VectorXd xbar =
      -(es.eigenvectors() * inv_lambda.asDiagonal() * es.eigenvectors().transpose() * p.q);
  p.r = -(0.5 * xbar.dot(p.P * xbar) + p.q.dot(xbar));
  return inst;
}

// ---------------------------------------------------------------------------
// Hybrid vehicle power split
// ---------------------------------------------------------------------------

Eigen::VectorXd synthetic_demand(int horizon, double p_max, std::uint64_t seed) {
  if (horizon < 1) throw std::invalid_argument("synthetic_demand: horizon >= 1");
  std::mt19937_64 gen = rng::make_stream(seed, 1);
  const double phase1 = rng::uniform(gen, 0.0, 2.0 * kPi);
  const double phase2 = rng::uniform(gen, 0.0, 2.0 * kPi);
  Eigen::VectorXd d(horizon);
  for (int t = 0; t < horizon; ++t) {
    const double base = 0.9 * std::sin(2.0 * kPi * t / horizon + phase1) +
                        0.5 * std::sin(4.0 * kPi * t / horizon + phase2);
    double noise = 0.3 * rng::normal(gen);
    noise = std::min(std::max(noise, -0.5), 0.5);
    d(t) = p_max * std::min(std::max(base + noise, -2.0), 2.0);
  }
  return d;
}

VehicleInstance gen_hybrid_vehicle(const VehicleParams& vp) {
  if (vp.alpha < 0 || vp.beta < 0 || vp.gamma < 0 || vp.delta < 0 || vp.eta < 0)
    throw std::invalid_argument("gen_hybrid_vehicle: cost coefficients must be nonnegative");
  if (!(vp.tau > 0) || !(vp.p_max > 0) || !(vp.e_max > 0))
    throw std::invalid_argument("gen_hybrid_vehicle: tau, p_max, e_max must be positive");
  if (vp.e0 < 0 || vp.e0 > vp.e_max)
    throw std::invalid_argument("gen_hybrid_vehicle: e0 must lie in [0, e_max]");
  if (vp.z_init != 0 && vp.z_init != 1)
    throw std::invalid_argument("gen_hybrid_vehicle: z_init must be 0 or 1");
  if (vp.horizon < 1) throw std::invalid_argument("gen_hybrid_vehicle: horizon >= 1");

  const int T = vp.horizon;
  Eigen::VectorXd demand = vp.demand;
  if (demand.size() == 0) demand = synthetic_demand(T, vp.p_max, 0);
  if (demand.size() != T) throw std::invalid_argument("gen_hybrid_vehicle: demand length != T");

  const Eigen::Index n = 8L * T;
  const Eigen::Index m = 4L * T;
  const auto pb = [T](int t) { return static_cast<Eigen::Index>(t); };
  const auto pe = [T](int t) { return static_cast<Eigen::Index>(T + t); };
  const auto zz = [T](int t) { return static_cast<Eigen::Index>(2 * T + t); };
  const auto ee = [T](int t) { return static_cast<Eigen::Index>(3 * T + t); };  // holds E_{t+1}
  const auto ss = [T](int t) { return static_cast<Eigen::Index>(4 * T + t); };
  const auto cc = [T](int t) { return static_cast<Eigen::Index>(5 * T + t); };
  const auto ww = [T](int t) { return static_cast<Eigen::Index>(6 * T + t); };
  const auto hh = [T](int t) { return static_cast<Eigen::Index>(7 * T + t); };

  VehicleInstance inst;
  inst.demand = demand;
  Problem& p = inst.problem;
  p.P = Eigen::MatrixXd::Zero(n, n);
  p.q = Eigen::VectorXd::Zero(n);
  p.A = Eigen::MatrixXd::Zero(m, n);
  p.b = Eigen::VectorXd::Zero(m);
  p.sets.assign(static_cast<std::size_t>(n), ConstraintSet::reals());

  for (int t = 0; t < T; ++t) {
    // Battery energy: E_{t+1} - E_t + tau P_batt_t = 0 (E_0 is data).
    const Eigen::Index row_batt = t;
    p.A(row_batt, ee(t)) = 1.0;
    if (t > 0) p.A(row_batt, ee(t - 1)) = -1.0;
    p.A(row_batt, pb(t)) = vp.tau;
    if (t == 0) p.b(row_batt) = vp.e0;

    // Demand with surplus slack: P_batt + P_eng - s = demand.
    const Eigen::Index row_dem = T + t;
    p.A(row_dem, pb(t)) = 1.0;
    p.A(row_dem, pe(t)) = 1.0;
    p.A(row_dem, ss(t)) = -1.0;
    p.b(row_dem) = demand(t);

    // Engine coupling: P_eng - p_max z + c = 0 enforces P_eng <= p_max z.
    const Eigen::Index row_eng = 2 * T + t;
    p.A(row_eng, pe(t)) = 1.0;
    p.A(row_eng, zz(t)) = -vp.p_max;
    p.A(row_eng, cc(t)) = 1.0;

    // Turn-on hinge: z_t - z_{t-1} - w + h = 0, so w = (z_t - z_{t-1})_+ at
    // any optimum with delta >= 0.
    const Eigen::Index row_hinge = 3 * T + t;
    p.A(row_hinge, zz(t)) = 1.0;
    if (t > 0) p.A(row_hinge, zz(t - 1)) = -1.0;
    p.A(row_hinge, ww(t)) = -1.0;
    p.A(row_hinge, hh(t)) = 1.0;
    if (t == 0) p.b(row_hinge) = static_cast<double>(vp.z_init);

    p.P(pe(t), pe(t)) = 2.0 * vp.alpha;
    p.q(pe(t)) = vp.beta;
    p.q(zz(t)) = vp.gamma;
    p.q(ww(t)) = vp.delta;

    p.sets[static_cast<std::size_t>(pe(t))] = ConstraintSet::interval(0.0, vp.p_max);
    p.sets[static_cast<std::size_t>(zz(t))] = ConstraintSet::finite_set({0.0, 1.0});
    p.sets[static_cast<std::size_t>(ee(t))] = ConstraintSet::interval(0.0, vp.e_max);
    p.sets[static_cast<std::size_t>(ss(t))] = ConstraintSet::nonneg_reals();
    p.sets[static_cast<std::size_t>(cc(t))] = ConstraintSet::nonneg_reals();
    p.sets[static_cast<std::size_t>(ww(t))] = ConstraintSet::nonneg_reals();
    p.sets[static_cast<std::size_t>(hh(t))] = ConstraintSet::nonneg_reals();
  }

  // Terminal energy penalty eta (E_T - e_max)^2, expanded.
  p.P(ee(T - 1), ee(T - 1)) += 2.0 * vp.eta;
  p.q(ee(T - 1)) += -2.0 * vp.eta * vp.e_max;
  p.r = vp.eta * vp.e_max * vp.e_max;

  IndexMap& map = inst.index_map;
  for (int t = 0; t < T; ++t) {
    map["P_batt"].push_back(pb(t));
    map["P_eng"].push_back(pe(t));
    map["z"].push_back(zz(t));
    map["E"].push_back(ee(t));
    map["s"].push_back(ss(t));
    map["c"].push_back(cc(t));
    map["w"].push_back(ww(t));
    map["h"].push_back(hh(t));
  }

  // Witness: engine always on, battery never charges, energy clamps unused.
  Eigen::VectorXd w = Eigen::VectorXd::Zero(n);
  double energy = vp.e0;
  int z_prev = vp.z_init;
  for (int t = 0; t < T; ++t) {
    const double eng = std::min(std::max(demand(t), 0.0), vp.p_max);
    const double batt = std::max(0.0, demand(t) - eng);
    w(pb(t)) = batt;
    w(pe(t)) = eng;
    w(zz(t)) = 1.0;
    energy -= vp.tau * batt;
    w(ee(t)) = energy;
    w(ss(t)) = batt + eng - demand(t);
    w(cc(t)) = vp.p_max - eng;
    const double dz = 1.0 - static_cast<double>(z_prev);
    w(ww(t)) = std::max(dz, 0.0);
    w(hh(t)) = w(ww(t)) - dz;
    z_prev = 1;
  }
  inst.witness = w;
  return inst;
}

// ---------------------------------------------------------------------------
// Switched-mode power converter
// ---------------------------------------------------------------------------

CircuitDynamics circuit_dynamics(const ConverterParams& cp) {
  if (!(cp.l1 > 0) || !(cp.c1 > 0) || !(cp.l2 > 0) || !(cp.c2 > 0) || !(cp.r_load > 0))
    throw std::invalid_argument("circuit_dynamics: component values must be positive");
  if (!(cp.h > 0)) throw std::invalid_argument("circuit_dynamics: h must be positive");

  // State (i1, v1, i2, v2): source inductor current, mid capacitor voltage,
  // second inductor current, output capacitor voltage.
  Eigen::Matrix4d Ac = Eigen::Matrix4d::Zero();
  Ac(0, 1) = -1.0 / cp.l1;
  Ac(0, 3) = -1.0 / cp.l1;
  Ac(1, 0) = 1.0 / cp.c1;
  Ac(1, 2) = -1.0 / cp.c1;
  Ac(2, 1) = 1.0 / cp.l2;
  Ac(3, 0) = 1.0 / cp.c2;
  Ac(3, 3) = -1.0 / (cp.r_load * cp.c2);
  Eigen::Vector4d Bc = Eigen::Vector4d::Zero();
  Bc(0) = cp.v_dc / cp.l1;

  // exp([Ac Bc; 0 0] h) = [G H; 0 1] gives the zero-order hold pair without
  // inverting Ac.
  Eigen::MatrixXd aug = Eigen::MatrixXd::Zero(5, 5);
  aug.topLeftCorner(4, 4) = Ac * cp.h;
  aug.topRightCorner(4, 1) = Bc * cp.h;
  const Eigen::MatrixXd E = expm(aug);

  CircuitDynamics dyn;
  dyn.G = E.topLeftCorner(4, 4);
  dyn.H = E.topRightCorner(4, 1);
  return dyn;
}

ConverterInstance gen_power_converter(const ConverterParams& cp) {
  if (cp.lambda < 0 || cp.mu < 0)
    throw std::invalid_argument("gen_power_converter: lambda, mu must be nonnegative");
  if (cp.horizon < 1) throw std::invalid_argument("gen_power_converter: horizon >= 1");

  const int T = cp.horizon;
  Eigen::VectorXd v_des = cp.v_des;
  if (v_des.size() == 0) {
    v_des.resize(T + 1);
    for (int t = 0; t <= T; ++t) v_des(t) = 5.0 * std::sin(2.0 * kPi * t / T);
  }
  if (v_des.size() != T + 1)
    throw std::invalid_argument("gen_power_converter: v_des length != T + 1");

  ConverterInstance inst;
  inst.dynamics = circuit_dynamics(cp);
  inst.horizon = T;
  inst.v_des = v_des;
  const Eigen::Matrix4d& G = inst.dynamics.G;
  const Eigen::Vector4d& H = inst.dynamics.H;

  const Eigen::Index n_states = 4L * (T + 1);
  const auto xi = [](int t, int j) { return static_cast<Eigen::Index>(4 * t + j); };
  const auto uu = [n_states](int t) { return n_states + t; };
  const auto aa = [n_states, T](int t) { return n_states + T + t; };
  const auto pp = [n_states, T](int t) { return n_states + 2 * T + t; };
  const auto nn = [n_states, T](int t) { return n_states + 3 * T + t; };

  const Eigen::Index n = n_states + 4L * T;
  const Eigen::Index m = 4L * T + 4 + 2L * T;

  Problem& p = inst.problem;
  p.P = Eigen::MatrixXd::Zero(n, n);
  p.q = Eigen::VectorXd::Zero(n);
  p.A = Eigen::MatrixXd::Zero(m, n);
  p.b = Eigen::VectorXd::Zero(m);
  p.r = 0.0;
  p.sets.assign(static_cast<std::size_t>(n), ConstraintSet::reals());

  for (int t = 0; t < T; ++t) {
    for (int j = 0; j < 4; ++j) {
      const Eigen::Index row = 4L * t + j;
      p.A(row, xi(t + 1, j)) = 1.0;
      for (int k = 0; k < 4; ++k) p.A(row, xi(t, k)) -= G(j, k);
      p.A(row, uu(t)) -= H(j);
    }
  }
  for (int j = 0; j < 4; ++j) {
    const Eigen::Index row = 4L * T + j;
    p.A(row, xi(0, j)) = 1.0;
    p.A(row, xi(T, j)) = -1.0;
  }
  for (int t = 0; t < T; ++t) {
    const int prev = t == 0 ? T - 1 : t - 1;  // cyclic switching difference
    const Eigen::Index row_p = 4L * T + 4 + 2L * t;
    const Eigen::Index row_n = row_p + 1;
    p.A(row_p, aa(t)) += 1.0;
    p.A(row_p, uu(t)) += -1.0;
    p.A(row_p, uu(prev)) += 1.0;
    p.A(row_p, pp(t)) += -1.0;
    p.A(row_n, aa(t)) += 1.0;
    p.A(row_n, uu(t)) += 1.0;
    p.A(row_n, uu(prev)) += -1.0;
    p.A(row_n, nn(t)) += -1.0;

    p.sets[static_cast<std::size_t>(uu(t))] = ConstraintSet::finite_set({-1.0, 0.0, 1.0});
    p.sets[static_cast<std::size_t>(aa(t))] = ConstraintSet::nonneg_reals();
    p.sets[static_cast<std::size_t>(pp(t))] = ConstraintSet::nonneg_reals();
    p.sets[static_cast<std::size_t>(nn(t))] = ConstraintSet::nonneg_reals();
    p.q(aa(t)) = cp.lambda;
  }

  // Least-squares reference: tracking objective only, u unconstrained,
  // no switching variables.
  {
    const Eigen::Index n_ls = n_states + T;
    const Eigen::Index m_ls = 4L * T + 4;
    Eigen::MatrixXd P_ls = Eigen::MatrixXd::Zero(n_ls, n_ls);
    Eigen::VectorXd q_ls = Eigen::VectorXd::Zero(n_ls);
    Eigen::MatrixXd A_ls = p.A.block(0, 0, m_ls, n_states + T);
    for (int t = 0; t <= T; ++t) {
      P_ls(xi(t, 3), xi(t, 3)) = 2.0;
      q_ls(xi(t, 3)) = -2.0 * v_des(t);
    }
    const auto sol = solve_equality_qp(P_ls, q_ls, A_ls, Eigen::VectorXd::Zero(m_ls));
    if (!sol) throw std::runtime_error("gen_power_converter: least-squares solve failed");
    inst.xi_ls = sol->head(n_states);
  }

  for (int t = 0; t <= T; ++t) {
    p.P(xi(t, 3), xi(t, 3)) += 2.0;
    p.q(xi(t, 3)) += -2.0 * v_des(t);
    p.r += v_des(t) * v_des(t);
  }
  for (Eigen::Index i = 0; i < n_states; ++i) {
    p.P(i, i) += 2.0 * cp.mu;
    p.q(i) += -2.0 * cp.mu * inst.xi_ls(i);
  }
  p.r += cp.mu * inst.xi_ls.squaredNorm();

  IndexMap& map = inst.index_map;
  static const char* kStateNames[4] = {"i1", "v1", "i2", "v2"};
  for (int t = 0; t <= T; ++t)
    for (int j = 0; j < 4; ++j) map[kStateNames[j]].push_back(xi(t, j));
  for (int t = 0; t < T; ++t) {
    map["u"].push_back(uu(t));
    map["a"].push_back(aa(t));
    map["p"].push_back(pp(t));
    map["n"].push_back(nn(t));
  }

  inst.witness = extend_switch_sequence(inst, Eigen::VectorXd::Zero(T));
  return inst;
}

Eigen::VectorXd extend_switch_sequence(const ConverterInstance& inst, const Eigen::VectorXd& u) {
  const int T = inst.horizon;
  if (u.size() != T) throw std::invalid_argument("extend_switch_sequence: u length != T");
  const Eigen::Matrix4d& G = inst.dynamics.G;
  const Eigen::Vector4d& H = inst.dynamics.H;

  // Periodicity pins xi_0: (I - G^T) xi_0 = sum_t G^(T-1-t) H u_t.
  Eigen::Matrix4d Gpow = Eigen::Matrix4d::Identity();
  Eigen::Vector4d forced = Eigen::Vector4d::Zero();
  for (int t = 0; t < T; ++t) {
    forced = G * forced + H * u(t);
    Gpow = G * Gpow;
  }
  const Eigen::Matrix4d M = Eigen::Matrix4d::Identity() - Gpow;
  Eigen::FullPivLU<Eigen::Matrix4d> lu(M);
  if (!lu.isInvertible())
    throw std::runtime_error("extend_switch_sequence: periodic map is singular");
  const Eigen::Vector4d xi0 = lu.solve(forced);

  const Eigen::Index n_states = 4L * (T + 1);
  Eigen::VectorXd full = Eigen::VectorXd::Zero(n_states + 4L * T);
  Eigen::Vector4d state = xi0;
  full.head(4) = state;
  for (int t = 0; t < T; ++t) {
    state = G * state + H * u(t);
    full.segment(4L * (t + 1), 4) = state;
  }
  for (int t = 0; t < T; ++t) {
    const double prev = t == 0 ? u(T - 1) : u(t - 1);
    const double delta = u(t) - prev;
    const double abs_delta = std::abs(delta);
    full(n_states + t) = u(t);
    full(n_states + T + t) = abs_delta;
    full(n_states + 2L * T + t) = abs_delta - delta;
    full(n_states + 3L * T + t) = abs_delta + delta;
  }
  return full;
}

// ---------------------------------------------------------------------------
// MIMO signal decoding
// ---------------------------------------------------------------------------

DecodeInstance gen_signal_decode(Eigen::Index n, Eigen::Index p_dim, double snr_db,
                                 std::uint64_t seed) {
  if (n < 1) throw std::invalid_argument("gen_signal_decode: n >= 1 required");
  if (p_dim < n) throw std::invalid_argument("gen_signal_decode: p_dim >= n required");

  static const double kConstellation[4] = {-3.0, -1.0, 1.0, 3.0};
  std::mt19937_64 gen = rng::make_stream(seed, 0);

  DecodeInstance inst;
  inst.channel.resize(p_dim, n);
  for (Eigen::Index i = 0; i < p_dim; ++i)
    for (Eigen::Index j = 0; j < n; ++j) inst.channel(i, j) = normal_draw(gen);

  inst.x_true.resize(n);
  for (Eigen::Index i = 0; i < n; ++i) {
    const int idx = std::min(3, static_cast<int>(rng::uniform01(gen) * 4.0));
    inst.x_true(i) = kConstellation[idx];
  }

  // Average per-received-component signal power is 5n (unit-variance channel,
  // symbol second moment 5), so this variance realizes the requested SNR.
  const double sigma2 = 5.0 * static_cast<double>(n) / std::pow(10.0, snr_db / 10.0);
  const double sigma = std::sqrt(sigma2);
  inst.y = inst.channel * inst.x_true;
  for (Eigen::Index i = 0; i < p_dim; ++i) inst.y(i) += sigma * normal_draw(gen);

  Problem& p = inst.problem;
  p.P = 2.0 * inst.channel.transpose() * inst.channel;
  p.q = -2.0 * inst.channel.transpose() * inst.y;
  p.r = inst.y.squaredNorm();
  p.A.resize(0, n);
  p.b.resize(0);
  p.sets.assign(static_cast<std::size_t>(n),
                ConstraintSet::finite_set({-3.0, -1.0, 1.0, 3.0}));
  return inst;
}

double bit_error_rate(const Eigen::VectorXd& x_hat, const Eigen::VectorXd& x_true) {
  if (x_hat.size() != x_true.size())
    throw std::invalid_argument("bit_error_rate: length mismatch");
  const auto gray = [](double v) -> unsigned {
    if (v == -3.0) return 0b00u;
    if (v == -1.0) return 0b01u;
    if (v == 1.0) return 0b11u;
    if (v == 3.0) return 0b10u;
    throw std::invalid_argument("bit_error_rate: entry not in constellation");
  };
  int wrong = 0;
  for (Eigen::Index i = 0; i < x_hat.size(); ++i) {
    const unsigned diff = gray(x_hat(i)) ^ gray(x_true(i));
    wrong += (diff & 1u) + ((diff >> 1) & 1u);
  }
  return static_cast<double>(wrong) / (2.0 * static_cast<double>(x_hat.size()));
}

}  // namespace ncadmm
