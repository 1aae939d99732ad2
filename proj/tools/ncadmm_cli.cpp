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

#include <cstdint>
#include <fstream>
#include <iostream>
#include <string>

#include "CLI11.hpp"
#include "json.hpp"

#include "ncadmm/admm.hpp"
#include "ncadmm/generators.hpp"
#include "ncadmm/json_io.hpp"
#include "ncadmm/suites.hpp"

namespace {

using nlohmann::json;

constexpr int kExitOk = 0;
constexpr int kExitInputError = 1;
constexpr int kExitNoFeasiblePoint = 2;

json eigen_to_json(const Eigen::VectorXd& v) {
  json out = json::array();
  for (Eigen::Index i = 0; i < v.size(); ++i) out.push_back(v(i));
  return out;
}

json index_map_to_json(const ncadmm::IndexMap& map) {
  json out;
  for (const auto& [name, indices] : map) out[name] = indices;
  return out;
}

std::string sidecar_path(const std::string& out_path) {
  const std::string suffix = ".json";
  if (out_path.size() > suffix.size() &&
      out_path.compare(out_path.size() - suffix.size(), suffix.size(), suffix) == 0) {
    return out_path.substr(0, out_path.size() - suffix.size()) + ".meta.json";
  }
  return out_path + ".meta.json";
}

void write_json_file(const json& doc, const std::string& path) {
  std::ofstream out(path);
  if (!out) throw std::runtime_error("cannot write file: " + path);
  out << doc.dump(2) << "\n";
}

struct SolveFlags {
  std::string problem_path;
  std::string preset;
  double rho = 1.0;
  int iters = 200;
  int restarts = 10;
  double tol = 1e-4;
  std::uint64_t seed = 0;
  std::string precondition = "l2";
  bool polish = false;
  bool timing = false;
  bool literal_dual = false;
  std::string trace_path;
};

ncadmm::PreconditionMode parse_precondition(const std::string& name) {
  if (name == "none") return ncadmm::PreconditionMode::kNone;
  if (name == "l1") return ncadmm::PreconditionMode::kRowL1;
  return ncadmm::PreconditionMode::kRowL2;
}

int run_solve(const SolveFlags& flags, const CLI::App& cmd) {
  ncadmm::Problem problem;
  try {
    problem = ncadmm::load_problem_json(flags.problem_path);
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitInputError;
  }

  ncadmm::Settings settings;
  if (!flags.preset.empty()) settings = ncadmm::preset_settings(flags.preset);
  if (cmd.count("--rho") > 0) settings.rho = flags.rho;
  if (cmd.count("--iters") > 0) settings.iters_per_restart = flags.iters;
  if (cmd.count("--restarts") > 0) settings.restarts = flags.restarts;
  if (cmd.count("--tol") > 0) settings.eps_tol = flags.tol;
  if (cmd.count("--precondition") > 0 || flags.preset.empty())
    settings.precondition = parse_precondition(flags.precondition);
  settings.seed = flags.seed;
  settings.polish = flags.polish;
  settings.trace = !flags.trace_path.empty();
  settings.dual_update =
      flags.literal_dual ? ncadmm::DualUpdate::kPreviousIterate : ncadmm::DualUpdate::kStandard;

  ncadmm::Solution sol;
  try {
    sol = ncadmm::solve(problem, settings);
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitInputError;
  }

  if (!flags.trace_path.empty()) ncadmm::save_trace_csv(sol.trace, flags.trace_path);
  std::cout << ncadmm::solution_to_json_string(sol, flags.timing);
  return sol.found_feasible ? kExitOk : kExitNoFeasiblePoint;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Heuristic solver for quadratic programs over affine equalities and "
               "per-coordinate (possibly nonconvex) sets"};
  app.require_subcommand(1);

  // --- solve ---------------------------------------------------------------
  SolveFlags solve_flags;
  CLI::App* solve_cmd = app.add_subcommand("solve", "Solve a problem JSON file");
  solve_cmd->add_option("problem", solve_flags.problem_path, "Problem JSON path")->required();
  solve_cmd->add_option("--preset", solve_flags.preset, "Settings preset")
      ->check(CLI::IsMember({"miqp", "vehicle", "converter", "decode"}));
  solve_cmd->add_option("--rho", solve_flags.rho, "Penalty parameter");
  solve_cmd->add_option("--iters", solve_flags.iters, "Iterations per restart");
  solve_cmd->add_option("--restarts", solve_flags.restarts, "Number of restarts");
  solve_cmd->add_option("--tol", solve_flags.tol, "Accepted feasibility tolerance");
  solve_cmd->add_option("--seed", solve_flags.seed, "RNG seed");
  solve_cmd->add_option("--precondition", solve_flags.precondition, "Diagonal scaling mode")
      ->check(CLI::IsMember({"none", "l1", "l2"}));
  solve_cmd->add_flag("--polish", solve_flags.polish, "Refine the best point");
  solve_cmd->add_flag("--timing", solve_flags.timing, "Include wall_ms in the output");
  solve_cmd->add_flag("--literal-dual", solve_flags.literal_dual,
                      "Dual update uses the previous projected iterate (comparison mode)");
  solve_cmd->add_option("--trace", solve_flags.trace_path, "Write per-iteration CSV here");

  // --- gen -----------------------------------------------------------------
  CLI::App* gen_cmd = app.add_subcommand("gen", "Generate an example problem");
  gen_cmd->require_subcommand(1);

  struct {
    std::int64_t n = 10, m = 3, n_bool = 5, n_nonneg = 0;
    std::uint64_t seed = 0;
    std::string out = "miqp.json";
  } miqp_flags;
  CLI::App* gen_miqp = gen_cmd->add_subcommand("miqp", "Random mixed-Boolean QP");
  gen_miqp->add_option("--n", miqp_flags.n, "Variables");
  gen_miqp->add_option("--m", miqp_flags.m, "Equality rows");
  gen_miqp->add_option("--bool", miqp_flags.n_bool, "Binary coordinates");
  gen_miqp->add_option("--nonneg", miqp_flags.n_nonneg, "Nonnegative coordinates");
  gen_miqp->add_option("--seed", miqp_flags.seed, "RNG seed");
  gen_miqp->add_option("--out", miqp_flags.out, "Output problem path");

  struct {
    int horizon = 4;
    std::uint64_t seed = 0;
    std::string out = "vehicle.json";
  } vehicle_flags;
  CLI::App* gen_vehicle = gen_cmd->add_subcommand("vehicle", "Hybrid vehicle power split");
  gen_vehicle->add_option("--T", vehicle_flags.horizon, "Horizon");
  gen_vehicle->add_option("--seed", vehicle_flags.seed, "Demand seed");
  gen_vehicle->add_option("--out", vehicle_flags.out, "Output problem path");

  struct {
    int horizon = 100;
    std::string out = "converter.json";
  } converter_flags;
  CLI::App* gen_converter = gen_cmd->add_subcommand("converter", "Switched-mode power converter");
  gen_converter->add_option("--T", converter_flags.horizon, "Horizon");
  gen_converter->add_option("--out", converter_flags.out, "Output problem path");

  struct {
    std::int64_t n = 400, p = 2000;
    double snr = 8.0;
    std::uint64_t seed = 0;
    std::string out = "decode.json";
  } decode_flags;
  CLI::App* gen_decode = gen_cmd->add_subcommand("decode", "MIMO constellation decoding");
  gen_decode->add_option("--n", decode_flags.n, "Symbols");
  gen_decode->add_option("--p", decode_flags.p, "Received dimension");
  gen_decode->add_option("--snr", decode_flags.snr, "SNR in dB");
  gen_decode->add_option("--seed", decode_flags.seed, "RNG seed");
  gen_decode->add_option("--out", decode_flags.out, "Output problem path");

  // --- bench ---------------------------------------------------------------
  struct {
    std::string suite;
    std::string out;
    std::int64_t instances = 0;
    std::uint64_t seed = 0;
  } bench_flags;
  CLI::App* bench_cmd = app.add_subcommand("bench", "Run a benchmark suite");
  bench_cmd->add_option("suite", bench_flags.suite, "Suite name")
      ->required()
      ->check(CLI::IsMember(
          {"miqp-oracle", "decode-vs-rlx", "convex-convergence", "vehicle", "converter"}));
  bench_cmd->add_option("--out", bench_flags.out, "Output CSV path");
  bench_cmd->add_option("--instances", bench_flags.instances, "Instance count (0 = default)");
  bench_cmd->add_option("--seed", bench_flags.seed, "Base seed (instance i uses seed + i)");

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return kExitInputError;
  }

  try {
    if (solve_cmd->parsed()) return run_solve(solve_flags, *solve_cmd);

    if (gen_cmd->parsed()) {
      if (gen_miqp->parsed()) {
        const ncadmm::MiqpInstance inst = ncadmm::gen_random_miqp(
            miqp_flags.n, miqp_flags.m, miqp_flags.n_bool, miqp_flags.n_nonneg, miqp_flags.seed);
        ncadmm::save_problem_json(inst.problem, miqp_flags.out);
        json meta;
        meta["example"] = "miqp";
        meta["params"] = {{"n", miqp_flags.n},
                          {"m", miqp_flags.m},
                          {"bool", miqp_flags.n_bool},
                          {"nonneg", miqp_flags.n_nonneg},
                          {"seed", miqp_flags.seed}};
        meta["witness"] = eigen_to_json(inst.x_feasible);
        write_json_file(meta, sidecar_path(miqp_flags.out));
      } else if (gen_vehicle->parsed()) {
        ncadmm::VehicleParams vp;
        vp.horizon = vehicle_flags.horizon;
        vp.demand = ncadmm::synthetic_demand(vp.horizon, vp.p_max, vehicle_flags.seed);
        const ncadmm::VehicleInstance inst = ncadmm::gen_hybrid_vehicle(vp);
        ncadmm::save_problem_json(inst.problem, vehicle_flags.out);
        json meta;
        meta["example"] = "vehicle";
        meta["params"] = {{"T", vp.horizon},          {"seed", vehicle_flags.seed},
                          {"alpha", vp.alpha},        {"beta", vp.beta},
                          {"gamma", vp.gamma},        {"delta", vp.delta},
                          {"eta", vp.eta},            {"tau", vp.tau},
                          {"p_max", vp.p_max},        {"e_max", vp.e_max},
                          {"e0", vp.e0},              {"z_init", vp.z_init}};
        meta["index_map"] = index_map_to_json(inst.index_map);
        meta["witness"] = eigen_to_json(inst.witness);
        meta["demand"] = eigen_to_json(inst.demand);
        write_json_file(meta, sidecar_path(vehicle_flags.out));
      } else if (gen_converter->parsed()) {
        ncadmm::ConverterParams cp;
        cp.horizon = converter_flags.horizon;
        const ncadmm::ConverterInstance inst = ncadmm::gen_power_converter(cp);
        ncadmm::save_problem_json(inst.problem, converter_flags.out);
        json meta;
        meta["example"] = "converter";
        meta["params"] = {{"T", cp.horizon},   {"l1", cp.l1},         {"c1", cp.c1},
                          {"l2", cp.l2},       {"c2", cp.c2},         {"r_load", cp.r_load},
                          {"v_dc", cp.v_dc},   {"h", cp.h},           {"lambda", cp.lambda},
                          {"mu", cp.mu}};
        meta["index_map"] = index_map_to_json(inst.index_map);
        meta["witness"] = eigen_to_json(inst.witness);
        meta["xi_ls"] = eigen_to_json(inst.xi_ls);
        meta["v_des"] = eigen_to_json(inst.v_des);
        write_json_file(meta, sidecar_path(converter_flags.out));
      } else if (gen_decode->parsed()) {
        const ncadmm::DecodeInstance inst = ncadmm::gen_signal_decode(
            decode_flags.n, decode_flags.p, decode_flags.snr, decode_flags.seed);
        ncadmm::save_problem_json(inst.problem, decode_flags.out);
        json meta;
        meta["example"] = "decode";
        meta["params"] = {{"n", decode_flags.n},
                          {"p", decode_flags.p},
                          {"snr_db", decode_flags.snr},
                          {"seed", decode_flags.seed}};
        meta["x_true"] = eigen_to_json(inst.x_true);
        meta["y"] = eigen_to_json(inst.y);
        write_json_file(meta, sidecar_path(decode_flags.out));
      }
      return kExitOk;
    }

    if (bench_cmd->parsed()) {
      const ncadmm::BenchResult result =
          ncadmm::run_suite(bench_flags.suite, bench_flags.instances, bench_flags.seed);
      const std::string out_path =
          bench_flags.out.empty() ? bench_flags.suite + ".csv" : bench_flags.out;
      ncadmm::save_bench_csv(result, out_path);
      std::cout << "suite " << result.suite << " -> " << out_path << "\n";
      for (const auto& [key, value] : result.summary)
        std::cout << "  " << key << " = " << value << "\n";
      return kExitOk;
    }
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitInputError;
  }
  return kExitInputError;
}
