// Parallel kernels against their serial references.

#include <benchmark/benchmark.h>

#include "wyner/assignment.hpp"
#include "wyner/monte_carlo.hpp"
#include "wyner/oracle.hpp"

using namespace wyner;

namespace {

void BM_EstimateParallel(benchmark::State& state)
{
    auto const k = static_cast<int>(state.range(0));
    auto const a = build_assignment(k, Fraction(1, 2));
    for (auto _ : state) {
        benchmark::DoNotOptimize(estimate_pudof(k, 0.3, a, 2000, 1, true));
    }
    state.SetItemsProcessed(state.iterations() * 2000);
}

void BM_EstimateSerial(benchmark::State& state)
{
    auto const k = static_cast<int>(state.range(0));
    auto const a = build_assignment(k, Fraction(1, 2));
    for (auto _ : state) {
        benchmark::DoNotOptimize(estimate_pudof_serial(k, 0.3, a, 2000, 1, true));
    }
    state.SetItemsProcessed(state.iterations() * 2000);
}

void BM_HistogramParallel(benchmark::State& state)
{
    auto const k = static_cast<int>(state.range(0));
    auto const a = build_assignment(k, Fraction(3, 5));
    auto const engine = state.range(1) ? DofEngine::Oracle : DofEngine::Scheduler;
    for (auto _ : state) {
        benchmark::DoNotOptimize(dof_histogram(k, a, engine, true));
    }
    state.SetItemsProcessed(state.iterations() * (std::int64_t{1} << (2 * k - 1)));
}

void BM_HistogramSerial(benchmark::State& state)
{
    auto const k = static_cast<int>(state.range(0));
    auto const a = build_assignment(k, Fraction(3, 5));
    auto const engine = state.range(1) ? DofEngine::Oracle : DofEngine::Scheduler;
    for (auto _ : state) {
        benchmark::DoNotOptimize(dof_histogram_serial(k, a, engine, true));
    }
    state.SetItemsProcessed(state.iterations() * (std::int64_t{1} << (2 * k - 1)));
}

} // namespace

BENCHMARK(BM_EstimateParallel)->Arg(20)->Arg(100)->Unit(benchmark::kMillisecond)->UseRealTime();
BENCHMARK(BM_EstimateSerial)->Arg(20)->Arg(100)->Unit(benchmark::kMillisecond)->UseRealTime();
BENCHMARK(BM_HistogramParallel)->Args({8, 0})->Args({6, 1})->Unit(benchmark::kMillisecond)->UseRealTime();
BENCHMARK(BM_HistogramSerial)->Args({8, 0})->Args({6, 1})->Unit(benchmark::kMillisecond)->UseRealTime();

BENCHMARK_MAIN();
