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
#include "quantromon/analytic.h"
#include "quantromon/flux.h"
#include "quantromon/numeric.h"

using namespace quantromon;

namespace {

ModeEnergies table_one() {
    auto p = CircuitParams::table_one();
    p.d_j = 0.045;
    return derive_energies(p);
}

void bench_analytic_spectrum(benchmark::State &state) {
    auto en = table_one();
    for (auto _ : state) {
        benchmark::DoNotOptimize(dressed_spectrum(en));
    }
}
BENCHMARK(bench_analytic_spectrum);

void bench_build_hamiltonian(benchmark::State &state) {
    auto en = table_one();
    Truncation t{static_cast<int>(state.range(0)), static_cast<int>(state.range(0))};
    for (auto _ : state) {
        benchmark::DoNotOptimize(build_hamiltonian(en, t));
    }
}
BENCHMARK(bench_build_hamiltonian)->Arg(10)->Arg(12)->Arg(14);

void bench_eigensolve(benchmark::State &state) {
    auto en = table_one();
    Truncation t{static_cast<int>(state.range(0)), static_cast<int>(state.range(0))};
    auto h = build_hamiltonian(en, t);
    for (auto _ : state) {
        benchmark::DoNotOptimize(eigensolve(h.entries));
    }
}
BENCHMARK(bench_eigensolve)->Arg(10)->Arg(12)->Arg(14)->Unit(benchmark::kMillisecond);

void bench_numeric_spectrum(benchmark::State &state) {
    auto en = table_one();
    for (auto _ : state) {
        benchmark::DoNotOptimize(numeric_spectrum(en, {12, 12}));
    }
}
BENCHMARK(bench_numeric_spectrum)->Unit(benchmark::kMillisecond);

void bench_flux_sweep(benchmark::State &state) {
    auto p = CircuitParams::table_one();
    p.d_j = 0.045;
    auto cfg = FluxConfig::from_circuit(p, FluxMode::BothSquids, 0.068);
    std::vector<int> n{0, 1, 2, 3, 4, 5, 6, 7, 8, 9};
    for (auto _ : state) {
        benchmark::DoNotOptimize(sweep(p, cfg, n, CoherenceConfig{}));
    }
}
BENCHMARK(bench_flux_sweep);

}  // namespace
