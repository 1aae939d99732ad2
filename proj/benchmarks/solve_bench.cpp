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

#include "ncadmm/admm.hpp"
#include "ncadmm/generators.hpp"

namespace {

// Paper-shaped random MIQP (half binary, a quarter nonnegative).
void BM_SolveMiqp(benchmark::State& state) {
  const Eigen::Index n = state.range(0);
  const auto inst = ncadmm::gen_random_miqp(n, n / 4, n / 2, n / 4, 11);
  ncadmm::Settings settings = ncadmm::preset_settings("miqp");
  for (auto _ : state) {
    auto sol = ncadmm::solve(inst.problem, settings);
    benchmark::DoNotOptimize(sol);
  }
}
BENCHMARK(BM_SolveMiqp)->Arg(20)->Arg(50)->Arg(100)->Arg(200)->Unit(benchmark::kMillisecond);

// Warm cache: only q and b change between consecutive solves.
void BM_ResolveSharedStructure(benchmark::State& state) {
  const Eigen::Index n = state.range(0);
  const auto inst = ncadmm::gen_random_miqp(n, n / 4, n / 2, 0, 13);
  ncadmm::Settings settings = ncadmm::preset_settings("miqp");
  settings.restarts = 2;
  ncadmm::Solver solver;
  ncadmm::Problem p = inst.problem;
  (void)solver.solve(p, settings);
  for (auto _ : state) {
    p.q.array() += 1e-3;
    auto sol = solver.solve(p, settings);
    benchmark::DoNotOptimize(sol);
  }
}
BENCHMARK(BM_ResolveSharedStructure)->Arg(50)->Arg(200)->Unit(benchmark::kMillisecond);

void BM_DecodeIteration(benchmark::State& state) {
  const auto inst = ncadmm::gen_signal_decode(state.range(0), 5 * state.range(0), 8.0, 3);
  ncadmm::Settings settings = ncadmm::preset_settings("decode");
  for (auto _ : state) {
    auto sol = ncadmm::solve(inst.problem, settings);
    benchmark::DoNotOptimize(sol);
  }
}
BENCHMARK(BM_DecodeIteration)->Arg(40)->Arg(100)->Arg(400)->Unit(benchmark::kMillisecond);

}  // namespace

BENCHMARK_MAIN();
