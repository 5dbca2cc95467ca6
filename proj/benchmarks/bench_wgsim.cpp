// Copyright 2026 The ampcap Authors
// SPDX-License-Identifier: Apache-2.0
#include <benchmark/benchmark.h>

#include "ampcap/wgsim.hpp"

using namespace ampcap;

static void BM_ScatteringMatrix(benchmark::State& state) {
    wgsim::LatticeSpec spec{static_cast<int>(state.range(0)), static_cast<int>(state.range(1)), 1.0, 0.0, 0.0, 0};
    for (auto _ : state) {
        ++spec.seed;
        benchmark::DoNotOptimize(wgsim::scattering_matrix(spec).matrix().data());
    }
    state.SetComplexityN(state.range(1));
}
BENCHMARK(BM_ScatteringMatrix)
    ->Args({10, 50})
    ->Args({10, 100})
    ->Args({10, 200})
    ->Args({20, 100})
    ->Args({40, 100})
    ->Unit(benchmark::kMicrosecond);

static void BM_Ensemble(benchmark::State& state) {
    const wgsim::LatticeSpec spec{10, 72, 1.0, 0.0, 0.0, 7};
    for (auto _ : state) {
        benchmark::DoNotOptimize(wgsim::run_ensemble(spec, 100).tau_bar_hat);
    }
}
BENCHMARK(BM_Ensemble)->Unit(benchmark::kMillisecond);
