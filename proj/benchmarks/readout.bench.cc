// Copyright 2026 The Quantromon Toolkit Authors
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

#include "benchmark/benchmark.h"
#include "quantromon/readout.h"

using namespace quantromon;

namespace {

void bench_simulate_shots(benchmark::State &state) {
    auto p = ReadoutParams::sample_c();
    int n = static_cast<int>(state.range(0));
    for (auto _ : state) {
        benchmark::DoNotOptimize(simulate_shots(p, 1, n, 1));
    }
    state.SetItemsProcessed(state.iterations() * n);
}
BENCHMARK(bench_simulate_shots)->Arg(20000)->Arg(100000);

void bench_fit_double_gaussian(benchmark::State &state) {
    auto p = ReadoutParams::sample_c();
    int n = static_cast<int>(state.range(0));
    auto s0 = simulate_shots(p, 0, n, 1);
    auto s1 = simulate_shots(p, 1, n, 1);
    for (auto _ : state) {
        benchmark::DoNotOptimize(fit_double_gaussian(s0, s1));
    }
}
BENCHMARK(bench_fit_double_gaussian)->Arg(20000)->Arg(100000)->Unit(benchmark::kMillisecond);

void bench_analyze_shots(benchmark::State &state) {
    auto p = ReadoutParams::sample_c();
    auto s0 = simulate_shots(p, 0, 20000, 1);
    auto s1 = simulate_shots(p, 1, 20000, 1);
    for (auto _ : state) {
        benchmark::DoNotOptimize(analyze_shots(s0.values, s1.values));
    }
}
BENCHMARK(bench_analyze_shots)->Unit(benchmark::kMillisecond);

}  // namespace
