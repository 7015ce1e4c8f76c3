#include <benchmark/benchmark.h>

#include "covdepth/codes.hpp"
#include "covdepth/exact.hpp"
#include "covdepth/montecarlo.hpp"

namespace {

using covdepth::Target;

// [15, 4] binary simplex: 2^15 column subsets, large enough for the parallel
// kernel to pay off while a single pass still finishes in milliseconds.
const covdepth::GenMatrix& subset_bench_matrix() {
    static const covdepth::GenMatrix g = covdepth::simplex(2, 4);
    return g;
}

void subset_counts_serial(benchmark::State& state) {
    const auto& g = subset_bench_matrix();
    covdepth::Limits limits;
    for (auto _ : state) {
        auto profile = covdepth::alpha_counts_serial(g, Target::basis(0), limits);
        benchmark::DoNotOptimize(profile);
    }
}
BENCHMARK(subset_counts_serial)->Unit(benchmark::kMillisecond);

void subset_counts_parallel(benchmark::State& state) {
    const auto& g = subset_bench_matrix();
    covdepth::Limits limits;
    int threads = static_cast<int>(state.range(0));
    for (auto _ : state) {
        auto profile = covdepth::alpha_counts(g, Target::basis(0), limits, threads);
        benchmark::DoNotOptimize(profile);
    }
}
BENCHMARK(subset_counts_parallel)->Arg(1)->Arg(2)->Arg(4)->Arg(8)->Unit(benchmark::kMillisecond);

void draw_simulation(benchmark::State& state) {
    auto g = covdepth::hamming(2, 3);
    covdepth::SimConfig cfg;
    cfg.trials = 200000;
    cfg.threads = static_cast<int>(state.range(0));
    for (auto _ : state) {
        auto result = covdepth::simulate(g, Target::column(0), cfg);
        benchmark::DoNotOptimize(result);
    }
}
BENCHMARK(draw_simulation)->Arg(1)->Arg(4)->Unit(benchmark::kMillisecond);

}  // namespace

BENCHMARK_MAIN();
