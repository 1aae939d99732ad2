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

#include <benchmark/benchmark.h>

#include "ncadmm/generators.hpp"
#include "ncadmm/kkt.hpp"

namespace {

using ncadmm::assemble_kkt;
using ncadmm::factor_kkt;
using ncadmm::solve_kkt;

ncadmm::Problem make_problem(Eigen::Index n, Eigen::Index m) {
  return ncadmm::gen_random_miqp(n, m, 0, 0, 7).problem;
}

void BM_FactorKkt(benchmark::State& state) {
  const Eigen::Index n = state.range(0);
  const Eigen::Index m = n / 4;
  const ncadmm::Problem p = make_problem(n, m);
  const ncadmm::Scaling scaling = ncadmm::compute_scaling(p, ncadmm::PreconditionMode::kRowL2);
  const Eigen::MatrixXd K = assemble_kkt(p.P, p.A, scaling, 1.0);
  for (auto _ : state) {
    auto fac = factor_kkt(K, n, m);
    benchmark::DoNotOptimize(fac);
  }
  state.SetComplexityN(state.range(0));
}
BENCHMARK(BM_FactorKkt)->RangeMultiplier(2)->Range(32, 512)->Complexity();

void BM_SolveKkt(benchmark::State& state) {
  const Eigen::Index n = state.range(0);
  const Eigen::Index m = n / 4;
  const ncadmm::Problem p = make_problem(n, m);
  const ncadmm::Scaling scaling = ncadmm::compute_scaling(p, ncadmm::PreconditionMode::kRowL2);
  const auto fac = factor_kkt(assemble_kkt(p.P, p.A, scaling, 1.0), n, m);
  const Eigen::VectorXd rhs = Eigen::VectorXd::Ones(n + m);
  for (auto _ : state) {
    Eigen::VectorXd sol = solve_kkt(fac, rhs);
    benchmark::DoNotOptimize(sol);
  }
  state.SetComplexityN(state.range(0));
}
BENCHMARK(BM_SolveKkt)->RangeMultiplier(2)->Range(32, 512)->Complexity();

}  // namespace
