#include <benchmark/benchmark.h>

#include "ulab/algebraic.hpp"
#include "ulab/braid.hpp"
#include "ulab/family.hpp"
#include "ulab/laurent.hpp"
#include "ulab/report.hpp"

namespace {

void BM_family_report(benchmark::State& state)
{
    const auto n = state.range(0);
    for (auto _ : state) {
        auto r = ulab::report(ulab::family_alexander(n), "bench");
        benchmark::DoNotOptimize(r);
    }
}
BENCHMARK(BM_family_report)->Arg(1)->Arg(10)->Arg(50)->Arg(200);

void BM_laurent_mul(benchmark::State& state)
{
    const auto n = state.range(0);
    std::vector<ulab::BigInt> cs(n);
    for (std::int64_t i = 0; i < n; ++i) cs[i] = (i % 3) - 1;
    ulab::LaurentPoly p(0, cs);
    for (auto _ : state) {
        auto q = ulab::laurent_mul(p, p);
        benchmark::DoNotOptimize(q);
    }
}
BENCHMARK(BM_laurent_mul)->Arg(32)->Arg(128)->Arg(512);

void BM_braid_alexander(benchmark::State& state)
{
    const auto word = ulab::family_braid_word(state.range(0));
    for (auto _ : state) {
        auto d = ulab::alexander_of_closure(word);
        benchmark::DoNotOptimize(d);
    }
}
BENCHMARK(BM_braid_alexander)->Arg(1)->Arg(5)->Arg(20);

void BM_torus_pipeline(benchmark::State& state)
{
    const std::int64_t p = state.range(0);
    const std::int64_t q = p + 1;
    for (auto _ : state) {
        auto r = ulab::report(ulab::torus_alexander(p, q), "torus");
        benchmark::DoNotOptimize(r);
    }
}
BENCHMARK(BM_torus_pipeline)->Arg(3)->Arg(7)->Arg(11);

} // namespace

BENCHMARK_MAIN();
