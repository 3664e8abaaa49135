#include <benchmark/benchmark.h>

#include "ar2/ar2_model.hpp"
#include "ar2/horadam.hpp"
#include "ar2/linear_process.hpp"

namespace {

constexpr ar2::AR2Params model{0.5, 0.3, 1.0};
constexpr ar2::horadam::Params horadam_params{0.5, 0.3};

void BM_Recursion(benchmark::State& state) {
    const auto n = static_cast<std::size_t>(state.range(0));
    for (auto _ : state) benchmark::DoNotOptimize(ar2::horadam::recursive(horadam_params, n));
    state.SetItemsProcessed(state.iterations() * state.range(0));
}
BENCHMARK(BM_Recursion)->Arg(50)->Arg(1000);

void BM_ClosedForm(benchmark::State& state) {
    const auto n = static_cast<std::size_t>(state.range(0));
    for (auto _ : state) benchmark::DoNotOptimize(ar2::horadam::closed_form_sequence(horadam_params, n));
    state.SetItemsProcessed(state.iterations() * state.range(0));
}
BENCHMARK(BM_ClosedForm)->Arg(50)->Arg(150);

void BM_PowerSeries(benchmark::State& state) {
    const auto n = static_cast<std::size_t>(state.range(0));
    for (auto _ : state) benchmark::DoNotOptimize(ar2::horadam::power_series(horadam_params, n));
    state.SetItemsProcessed(state.iterations() * state.range(0));
}
BENCHMARK(BM_PowerSeries)->Arg(50)->Arg(1000);

void BM_PartialFractions(benchmark::State& state) {
    const auto roots = ar2::characteristic_roots(model);
    const auto n = static_cast<std::size_t>(state.range(0));
    for (auto _ : state)
        for (std::size_t u = 0; u <= n; ++u) benchmark::DoNotOptimize(ar2::psi_partial_fractions(roots, u));
    state.SetItemsProcessed(state.iterations() * state.range(0));
}
BENCHMARK(BM_PartialFractions)->Arg(50)->Arg(1000);

void BM_CauchyProduct(benchmark::State& state) {
    const auto roots = ar2::characteristic_roots(model);
    const auto n = static_cast<std::size_t>(state.range(0));
    for (auto _ : state)
        for (std::size_t u = 0; u <= n; ++u) benchmark::DoNotOptimize(ar2::psi_cauchy_product(roots, u));
    state.SetItemsProcessed(state.iterations() * state.range(0));
}
BENCHMARK(BM_CauchyProduct)->Arg(50)->Arg(200);

void BM_TruncationOrder(benchmark::State& state) {
    for (auto _ : state) benchmark::DoNotOptimize(ar2::truncation_order(model, 1e-12));
}
BENCHMARK(BM_TruncationOrder);

void BM_AcfFromMa(benchmark::State& state) {
    const auto order = std::max(ar2::truncation_order(model, 1e-12),
                                ar2::acf_required_order(model, 10, ar2::acf_reference_gate));
    const auto ir = ar2::impulse_response(model, order);
    for (auto _ : state) benchmark::DoNotOptimize(ar2::acf_from_ma(ir, 10));
}
BENCHMARK(BM_AcfFromMa);

}  // namespace
