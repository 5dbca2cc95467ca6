// Copyright 2026 The ampcap Authors
// SPDX-License-Identifier: Apache-2.0
#include <benchmark/benchmark.h>

#include "ampcap/capacity.hpp"
#include "ampcap/oracle.hpp"
#include "ampcap/phase.hpp"
#include "ampcap/quadrature.hpp"

using namespace ampcap;

static void BM_HolevoClosedForm(benchmark::State& state) {
    const MediumParams p{10, 2.0, 0.05, 10.0};
    for (auto _ : state) {
        benchmark::DoNotOptimize(c_holevo_avg(p).bits);
    }
}
BENCHMARK(BM_HolevoClosedForm);

static void BM_HolevoNoGainQuadrature(benchmark::State& state) {
    for (auto _ : state) {
        benchmark::DoNotOptimize(c_holevo_noamp(0.0133, 10.0, {1e-12, 1e-12, 20000}).bits);
    }
}
BENCHMARK(BM_HolevoNoGainQuadrature);

static void BM_QuadratureOracle(benchmark::State& state) {
    for (auto _ : state) {
        benchmark::DoNotOptimize(
            oracle::quad_average_capacity(oracle::CapacityKind::holevo, 1.0, 2.0, 1.0, {1e-14, 1e-13, 20000}).bits);
    }
}
BENCHMARK(BM_QuadratureOracle);

static void BM_GaussLaguerreRule(benchmark::State& state) {
    // Cached after the first call; this measures the lookup plus one weighted sum.
    const int n = static_cast<int>(state.range(0));
    for (auto _ : state) {
        benchmark::DoNotOptimize(quad::gauss_laguerre_sum([](double x) { return x * x; }, n));
    }
}
BENCHMARK(BM_GaussLaguerreRule)->Arg(64)->Arg(128);

static void BM_MonteCarlo(benchmark::State& state) {
    const MediumParams p{10, 2.0, 0.05, 10.0};
    const auto n = static_cast<std::size_t>(state.range(0));
    for (auto _ : state) {
        benchmark::DoNotOptimize(oracle::mc_average_capacity(oracle::CapacityKind::holevo, p, n, {1, 1}).mean);
    }
    state.SetItemsProcessed(static_cast<std::int64_t>(state.iterations() * n));
}
BENCHMARK(BM_MonteCarlo)->Arg(1 << 16)->Unit(benchmark::kMillisecond);

static void BM_SeparatrixRoot(benchmark::State& state) {
    for (auto _ : state) {
        benchmark::DoNotOptimize(phase::separatrix(0.05, 1e-3, 1.0).power_per_mode);
    }
}
BENCHMARK(BM_SeparatrixRoot)->Unit(benchmark::kMillisecond);
