//---------------------------------------------------------------------------//
// Copyright tcbm contributors
// SPDX-License-Identifier: Apache-2.0
//---------------------------------------------------------------------------//
//! \file bench.cpp
//! Serial reference against OpenMP kernels.
//---------------------------------------------------------------------------//
#include <benchmark/benchmark.h>

#include "tcbm/density.hpp"
#include "tcbm/samplers.hpp"

using namespace tcbm;

namespace
{
CgmyParams const cgmy_ref(1, 5, 10, 0.5);
MeixnerParams const meixner_ref(0.25, -1.5, 1);

SimulationConfig bench_config(benchmark::State const& state)
{
    SimulationConfig cfg;
    cfg.n_samples = static_cast<std::size_t>(state.range(0));
    cfg.epsilon = 1e-6;
    return cfg;
}

void BM_sample_cgmy_reference(benchmark::State& state)
{
    auto const cfg = bench_config(state);
    for (auto _ : state)
    {
        benchmark::DoNotOptimize(reference::sample_cgmy(cgmy_ref, cfg));
    }
    state.SetItemsProcessed(state.iterations() * state.range(0));
}

void BM_sample_cgmy_parallel(benchmark::State& state)
{
    auto const cfg = bench_config(state);
    for (auto _ : state)
    {
        benchmark::DoNotOptimize(sample_cgmy(cgmy_ref, cfg));
    }
    state.SetItemsProcessed(state.iterations() * state.range(0));
}

void BM_sample_meixner_reference(benchmark::State& state)
{
    auto const cfg = bench_config(state);
    for (auto _ : state)
    {
        benchmark::DoNotOptimize(reference::sample_meixner(meixner_ref, cfg));
    }
    state.SetItemsProcessed(state.iterations() * state.range(0));
}

void BM_sample_meixner_parallel(benchmark::State& state)
{
    auto const cfg = bench_config(state);
    for (auto _ : state)
    {
        benchmark::DoNotOptimize(sample_meixner(meixner_ref, cfg));
    }
    state.SetItemsProcessed(state.iterations() * state.range(0));
}

GridSpec bench_grid(benchmark::State const& state)
{
    return {-0.125, 0.125, static_cast<std::size_t>(state.range(0))};
}

void BM_invert_meixner_reference(benchmark::State& state)
{
    auto const cf = make_cf_handle(meixner_ref);
    for (auto _ : state)
    {
        benchmark::DoNotOptimize(reference::invert_cf(cf, 0.02, bench_grid(state)));
    }
}

void BM_invert_meixner_parallel(benchmark::State& state)
{
    auto const cf = make_cf_handle(meixner_ref);
    for (auto _ : state)
    {
        benchmark::DoNotOptimize(invert_cf(cf, 0.02, bench_grid(state)));
    }
}
}  // namespace

BENCHMARK(BM_sample_cgmy_reference)->Arg(5000)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_sample_cgmy_parallel)->Arg(5000)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_sample_meixner_reference)->Arg(5000)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_sample_meixner_parallel)->Arg(5000)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_invert_meixner_reference)->Arg(250)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_invert_meixner_parallel)->Arg(250)->Unit(benchmark::kMillisecond);

BENCHMARK_MAIN();
