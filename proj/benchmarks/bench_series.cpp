#include <benchmark/benchmark.h>

#include "hoc/series.hpp"
#include "hoc/surface.hpp"
#include "hoc/word.hpp"

using namespace hoc;

static void BM_expand_word(benchmark::State& state) {
    const int cap = int(state.range(0));
    Word w = Word::commutator(Word::generator(1), Word::generator(2)) *
             Word::commutator(Word::generator(3), Word::generator(4));
    for (auto _ : state) benchmark::DoNotOptimize(expand_word(w, cap, 4));
}
BENCHMARK(BM_expand_word)->Arg(3)->Arg(5);

static void BM_rewrite(benchmark::State& state) {
    const int cap = int(state.range(0));
    GenusContext ctx = make_genus_context(2, cap);
    TruncatedSeries e = mul(TruncatedSeries::generator(1, cap),
                            TruncatedSeries::generator(2, cap));
    for (auto _ : state) benchmark::DoNotOptimize(rewrite_normal_form(e, ctx));
}
BENCHMARK(BM_rewrite)->Arg(3)->Arg(4);

BENCHMARK_MAIN();
