// Copyright 2026 The k3inst Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include <benchmark/benchmark.h>

#include "k3inst/golden.h"
#include "k3inst/hypersurface.h"
#include "k3inst/lattice.h"
#include "k3inst/reid.h"
#include "k3inst/singular.h"

namespace {

using namespace k3inst;

void BM_Search(benchmark::State& state) {
  const auto bound = state.range(0);
  for (auto _ : state) benchmark::DoNotOptimize(search(bound, 1));
}
BENCHMARK(BM_Search)->Arg(20)->Arg(40)->Arg(100)->Unit(benchmark::kMillisecond)->UseRealTime();

void BM_EnumerateMonomials(benchmark::State& state) {
  const auto w = normalize_weights({5, 6, 7, 9});
  const IndexSubset everything{0, 1, 2, 3};
  for (auto _ : state) benchmark::DoNotOptimize(enumerate_monomials(w, w.degree(), everything));
}
BENCHMARK(BM_EnumerateMonomials);

void BM_QuasiSmoothWitnesses(benchmark::State& state) {
  const auto w = normalize_weights({7, 8, 9, 12});
  for (auto _ : state) benchmark::DoNotOptimize(general_member_quasi_smooth(w));
}
BENCHMARK(BM_QuasiSmoothWitnesses);

void BM_SingularityDataGolden(benchmark::State& state) {
  const auto table = golden_table();
  for (auto _ : state)
    for (const auto& row : table) benchmark::DoNotOptimize(singularity_data(row.weights));
  state.SetItemsProcessed(state.iterations() * static_cast<int64_t>(table.size()));
}
BENCHMARK(BM_SingularityDataGolden);

void BM_FiniteFieldOracleGolden(benchmark::State& state) {
  const auto table = golden_table();
  for (auto _ : state)
    for (const auto& row : table) benchmark::DoNotOptimize(oracle_singularity_data(row.weights, kOraclePrime, 1));
  state.SetItemsProcessed(state.iterations() * static_cast<int64_t>(table.size()));
}
BENCHMARK(BM_FiniteFieldOracleGolden)->Unit(benchmark::kMillisecond);

}  // namespace

BENCHMARK_MAIN();
