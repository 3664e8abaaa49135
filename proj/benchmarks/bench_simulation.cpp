#include <benchmark/benchmark.h>

#include "ar2/noise.hpp"
#include "ar2/simulation.hpp"

namespace {

constexpr ar2::AR2Params model{0.5, 0.3, 1.0};

void BM_WhiteNoise(benchmark::State& state) {
    const auto n = static_cast<std::size_t>(state.range(0));
    for (auto _ : state) benchmark::DoNotOptimize(ar2::noise::white_noise({42, n, 1.0}));
    state.SetItemsProcessed(state.iterations() * state.range(0));
}
BENCHMARK(BM_WhiteNoise)->Arg(10000)->Arg(100000);

void BM_SimulateRecursive(benchmark::State& state) {
    const auto n = static_cast<std::size_t>(state.range(0));
    for (auto _ : state) benchmark::DoNotOptimize(ar2::simulate_recursive(model, {42, n, 1.0}, 90));
    state.SetItemsProcessed(state.iterations() * state.range(0));
}
BENCHMARK(BM_SimulateRecursive)->Arg(10000)->Arg(100000);

void BM_SimulateMa(benchmark::State& state) {
    const auto n = static_cast<std::size_t>(state.range(0));
    const auto ir = ar2::impulse_response(model, ar2::truncation_order(model, 1e-12));
    for (auto _ : state) benchmark::DoNotOptimize(ar2::simulate_ma(model, {42, n, 1.0}, ir));
    state.SetItemsProcessed(state.iterations() * state.range(0));
}
BENCHMARK(BM_SimulateMa)->Arg(10000)->Arg(100000);

void BM_SampleAutocovariance(benchmark::State& state) {
    const auto sample = ar2::simulate_recursive(model, {42, 100000, 1.0}, 90);
    for (auto _ : state) benchmark::DoNotOptimize(ar2::sample_autocovariance(sample.values, 5));
}
BENCHMARK(BM_SampleAutocovariance);

}  // namespace

BENCHMARK_MAIN();
