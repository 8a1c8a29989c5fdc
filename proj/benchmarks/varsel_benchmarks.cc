// Copyright 2026 The Authors.
//
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

// Microbenchmarks of the selectors. Args: rows m, columns v, selections k.

#include <benchmark/benchmark.h>

#include "varsel/dataset.h"
#include "varsel/oracle.h"
#include "varsel/selectors.h"
#include "varsel/simgen.h"

namespace varsel {
namespace {

Dataset Data(const benchmark::State& state) {
  GaussianStream g(42);
  return center_columns(Dataset(g.matrix(state.range(0), state.range(1))));
}

template <SelectionResult (*Select)(const Dataset&, const StoppingRule&)>
void BM_Residual(benchmark::State& state) {
  const Dataset d = Data(state);
  const StoppingRule stop = StoppingRule::Cardinality(static_cast<int>(state.range(2)));
  std::int64_t evals = 0;
  for (auto _ : state) {
    const SelectionResult r = Select(d, stop);
    evals = r.eval_count;
    benchmark::DoNotOptimize(r.order.data());
  }
  state.counters["evals"] = static_cast<double>(evals);
}

void BM_FsfpFsca(benchmark::State& state) {
  const Dataset d = Data(state);
  const StoppingRule stop = StoppingRule::Cardinality(static_cast<int>(state.range(2)));
  const bool lazy = state.range(3) != 0;
  for (auto _ : state) {
    benchmark::DoNotOptimize(fsfp_fsca_select(d, stop, lazy).order.data());
  }
}

void BM_Ufs(benchmark::State& state) {
  const Dataset d = Data(state);
  const StoppingRule stop = StoppingRule::Cardinality(static_cast<int>(state.range(2)));
  const bool lazy = state.range(3) != 0;
  for (auto _ : state) {
    benchmark::DoNotOptimize(ufs_select(d, stop, lazy).order.data());
  }
}

void BM_Itfs(benchmark::State& state) {
  const Dataset d = Data(state);
  const StoppingRule stop = StoppingRule::Cardinality(static_cast<int>(state.range(2)));
  for (auto _ : state) benchmark::DoNotOptimize(itfs_select(d, stop).order.data());
}

void BM_ExhaustiveVe(benchmark::State& state) {
  const Dataset d = Data(state);
  const int k = static_cast<int>(state.range(2));
  for (auto _ : state) benchmark::DoNotOptimize(exhaustive_optimal(d, k, Metric::kVe).value);
}

BENCHMARK(BM_Residual<fsca_select>)
    ->Name("FSCA")
    ->Args({500, 100, 5})
    ->Args({2000, 200, 20})
    ->Unit(benchmark::kMillisecond);
BENCHMARK(BM_Residual<lfsca_select>)
    ->Name("L-FSCA")
    ->Args({500, 100, 5})
    ->Args({2000, 200, 20})
    ->Unit(benchmark::kMillisecond);
BENCHMARK(BM_Residual<fosmod_select>)->Name("FOS-MOD")->Args({500, 100, 5})->Unit(benchmark::kMillisecond);
BENCHMARK(BM_FsfpFsca)->Args({500, 100, 10, 0})->Args({500, 100, 10, 1})->Unit(benchmark::kMillisecond);
BENCHMARK(BM_Ufs)->Args({500, 100, 10, 0})->Args({500, 100, 10, 1})->Unit(benchmark::kMillisecond);
BENCHMARK(BM_Itfs)->Args({500, 50, 10})->Unit(benchmark::kMillisecond);
BENCHMARK(BM_ExhaustiveVe)->Args({180, 13, 7})->Unit(benchmark::kMillisecond);

}  // namespace
}  // namespace varsel

BENCHMARK_MAIN();
