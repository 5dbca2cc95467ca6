// Copyright 2026 The ampcap Authors
// SPDX-License-Identifier: Apache-2.0
#include <benchmark/benchmark.h>

#include <cmath>

#include "ampcap/specfun.hpp"

static void BM_ExpGamma0(benchmark::State& state) {
    const double x = std::ldexp(1.0, static_cast<int>(state.range(0)));
    for (auto _ : state) {
        benchmark::DoNotOptimize(ampcap::specfun::exp_gamma0(x));
    }
}
BENCHMARK(BM_ExpGamma0)->DenseRange(-20, 20, 10);

static void BM_GEntropy(benchmark::State& state) {
    double x = 0.5;
    for (auto _ : state) {
        benchmark::DoNotOptimize(ampcap::specfun::g_entropy(x));
        x += 1e-9;
    }
}
BENCHMARK(BM_GEntropy);
