#include <benchmark/benchmark.h>

#include "hoc/dims.hpp"

using namespace hoc;

static void BM_n_g_recursion(benchmark::State& state) {
    for (auto _ : state) benchmark::DoNotOptimize(n_g(3, int(state.range(0))));
}
BENCHMARK(BM_n_g_recursion)->Arg(8)->Arg(16);

static void BM_n_g_closed_form(benchmark::State& state) {
    for (auto _ : state)
        benchmark::DoNotOptimize(n_g_closed_form(3, int(state.range(0))));
}
BENCHMARK(BM_n_g_closed_form)->Arg(8)->Arg(16);

BENCHMARK_MAIN();
