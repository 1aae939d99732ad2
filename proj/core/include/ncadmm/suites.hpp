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
#include <iosfwd>
#include <string>
#include <utility>
#include <vector>

namespace ncadmm {

/// Per-instance rows plus named aggregates. Instance i of a suite uses seed
/// base_seed + i; instances may be evaluated concurrently but rows are always
/// ordered by instance index.
struct BenchResult {
  std::string suite;
  std::vector<std::string> columns;
  std::vector<std::vector<double>> rows;
  std::vector<std::pair<std::string, double>> summary;

  double summary_value(const std::string& key) const;
};

/// Scaled-down random mixed-Boolean QPs (n = 10, m = 3, 5 binary) against the
/// enumeration oracle, with the tuned miqp settings plus polishing.
/// Columns: instance, seed, found_feasible, f_admm, f_oracle, gap, residual,
/// wall_ms. Summary: feasible_rate, gap_le_10pct_rate, gap_zero_rate,
/// min_gap, total_wall_ms.
BenchResult run_miqp_oracle_suite(std::int64_t instances, std::uint64_t base_seed);

/// Constellation decoding (n = 40, p = 200, SNR 8 dB) with the 10-iteration
/// single-start settings against relax-and-round.
/// Columns: instance, seed, f_admm, f_rlx, ber_admm, ber_rlx, wall_ms.
/// Summary: admm_le_rlx_rate, mean_ber_admm, mean_ber_rlx, total_wall_ms.
BenchResult run_decode_vs_rlx_suite(std::int64_t instances, std::uint64_t base_seed);

/// Random equality-constrained QPs (all coordinates free, n <= 20, m <= 10):
/// a fixed 5000-iteration run recording the affine residual trajectory, plus
/// a polished multi-start solve compared with the direct KKT solve.
/// Columns: instance, seed, n, m, f_admm, f_direct, obj_err, final_residual,
/// min_residual, wall_ms. Summary: max_obj_err, max_final_residual,
/// total_wall_ms.
BenchResult run_convex_convergence_suite(std::int64_t instances, std::uint64_t base_seed);

/// Hybrid-vehicle instances at horizon 4 (oracle-tractable) with per-instance
/// synthetic demand. Columns: instance, seed, found_feasible, f_admm,
/// f_oracle, gap, residual, witness_residual, wall_ms. Summary:
/// feasible_rate, max_witness_residual, max_gap, total_wall_ms.
BenchResult run_vehicle_suite(std::int64_t instances, std::uint64_t base_seed);

/// Power-converter instances at horizon 6 (3^6 switch patterns). Columns and
/// summary mirror the vehicle suite.
BenchResult run_converter_suite(std::int64_t instances, std::uint64_t base_seed);

/// Dispatch by suite name: miqp-oracle | decode-vs-rlx | convex-convergence |
/// vehicle | converter. instances = 0 uses the suite default.
BenchResult run_suite(const std::string& name, std::int64_t instances, std::uint64_t base_seed);

/// Header, one row per instance, then a trailing "summary,key=value,..." row.
void write_bench_csv(const BenchResult& result, std::ostream& os);
void save_bench_csv(const BenchResult& result, const std::string& path);

}  // namespace ncadmm
