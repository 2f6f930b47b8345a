#include "frospec/fixtures.hpp"
#include "frospec/inverse.hpp"
#include "frospec/spectrum.hpp"

#include <benchmark/benchmark.h>

using namespace frospec;

namespace {

void bm_delta_piecewise(benchmark::State& state) {
    const auto demo = fixtures::confusable_demo();
    const Complex lam{137.2, 4.1};
    for (auto _ : state) {
        benchmark::DoNotOptimize(delta_expanded(0, lam, demo.pair1).total);
    }
}
BENCHMARK(bm_delta_piecewise);

void bm_delta_trig_series(benchmark::State& state) {
    const Problem prob = fixtures::sign_series_mirrored(state.range(0));
    const Complex lam{137.2, 4.1};
    for (auto _ : state) {
        benchmark::DoNotOptimize(delta_expanded(0, lam, prob).total);
    }
}
BENCHMARK(bm_delta_trig_series)->Arg(15)->Arg(60);

void bm_locate_eigenvalues(benchmark::State& state) {
    const auto demo = fixtures::confusable_demo();
    LocateOptions opts;
    opts.certify = false;
    for (auto _ : state) {
        benchmark::DoNotOptimize(locate_eigenvalues(demo.pair1, 0, state.range(0), opts));
    }
}
BENCHMARK(bm_locate_eigenvalues)->Arg(10)->Arg(50);

void bm_winding(benchmark::State& state) {
    const auto demo = fixtures::confusable_demo();
    for (auto _ : state) {
        benchmark::DoNotOptimize(winding_count(demo.pair1, 0, state.range(0)));
    }
}
BENCHMARK(bm_winding)->Arg(10)->Arg(50);

void bm_reconstruct(benchmark::State& state) {
    const Problem prob = fixtures::right_supported_smooth();
    LocateOptions opts;
    opts.certify = false;
    const SpectraPair pair(locate_eigenvalues(prob, 0, 80, opts),
                           locate_eigenvalues(prob, 1, 80, opts));
    for (auto _ : state) {
        benchmark::DoNotOptimize(reconstruct(pair, prob.a, prob.b, 60));
    }
}
BENCHMARK(bm_reconstruct);

} // namespace

BENCHMARK_MAIN();
