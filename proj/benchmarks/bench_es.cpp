#include <benchmark/benchmark.h>

#include "hoc/es/group_fixture.hpp"
#include "hoc/es/integrate.hpp"

using namespace hoc;

static void BM_eval_form(benchmark::State& state) {
    GroupFixture fx = gamma0_11();
    CuspFormSpec f = fixture_form(fx, 4000);
    const std::complex<double> z(0.31, std::pow(10.0, -double(state.range(0))));
    for (auto _ : state) benchmark::DoNotOptimize(eval_form(f, z, 1e-13));
}
BENCHMARK(BM_eval_form)->Arg(1)->Arg(2);

static void BM_integrate_omega(benchmark::State& state) {
    GroupFixture fx = gamma0_11();
    CuspFormSpec f = fixture_form(fx, 4000);
    QuadConfig cfg;
    for (auto _ : state)
        benchmark::DoNotOptimize(integrate_omega(f, 0, {0.0, 1.0}, {0.5, 0.1}, cfg));
}
BENCHMARK(BM_integrate_omega);

BENCHMARK_MAIN();
