#include <benchmark/benchmark.h>

#include "hoc/subspace.hpp"

using namespace hoc;

static void BM_span_reduce_rat(benchmark::State& state) {
    const std::size_t n = std::size_t(state.range(0));
    Mat<Rat> rows(n, Vec<Rat>(n));
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j)
            rows[i][j] = Rat(long((i * 7 + j * 3) % 11) - 5, long(1 + (i + j) % 4));
    for (auto _ : state) benchmark::DoNotOptimize(span_reduce(rows, n).dim());
}
BENCHMARK(BM_span_reduce_rat)->Arg(16)->Arg(48);

static void BM_span_reduce_fp(benchmark::State& state) {
    const std::size_t n = std::size_t(state.range(0));
    const std::uint32_t p = 1000003;
    Mat<Fp> rows(n, Vec<Fp>(n, Fp(0, p)));
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j)
            rows[i][j] = Fp(std::uint32_t((i * 2654435761u + j * 40503u) % p), p);
    for (auto _ : state) benchmark::DoNotOptimize(span_reduce(rows, n).dim());
}
BENCHMARK(BM_span_reduce_fp)->Arg(32)->Arg(96);

BENCHMARK_MAIN();
