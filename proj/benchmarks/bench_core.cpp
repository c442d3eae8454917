#include <benchmark/benchmark.h>

#include "sqfe/amortize.hpp"
#include "sqfe/families.hpp"
#include "sqfe/isolator.hpp"
#include "sqfe/rootfinder.hpp"
#include "sqfe/sturm.hpp"

using namespace sqfe;

namespace {

void BM_TaylorShift(benchmark::State& state) {
    const auto f = family_generate(Family::random_dense, static_cast<unsigned>(state.range(0)),
                                   16, 7);
    const Dyadic m(BigInt(3), -5);
    for (auto _ : state) {
        auto t = taylor_expansion(f, m);
        benchmark::DoNotOptimize(t);
    }
    state.SetComplexityN(state.range(0));
}
BENCHMARK(BM_TaylorShift)->RangeMultiplier(2)->Range(4, 64)->Complexity();

void BM_ExclusionTest(benchmark::State& state) {
    const auto f = family_generate(Family::random_dense, static_cast<unsigned>(state.range(0)),
                                   16, 11);
    const auto g = square_free_part(f);
    const Interval J(Dyadic(BigInt(1), -3), Dyadic(BigInt(3), -3));
    for (auto _ : state) {
        bool r = taylor_exclusion_test(g, J);
        benchmark::DoNotOptimize(r);
    }
}
BENCHMARK(BM_ExclusionTest)->RangeMultiplier(2)->Range(4, 64);

void BM_IsolateMignotte(benchmark::State& state) {
    const auto f = family_generate(Family::mignotte, static_cast<unsigned>(state.range(0)),
                                   static_cast<unsigned>(state.range(1)), 0);
    for (auto _ : state) {
        auto rep = isolate_benchmark(f);
        benchmark::DoNotOptimize(rep);
    }
}
BENCHMARK(BM_IsolateMignotte)
    ->Args({4, 8})
    ->Args({8, 8})
    ->Args({8, 16})
    ->Args({12, 16})
    ->Unit(benchmark::kMillisecond);

void BM_IsolateRandom(benchmark::State& state) {
    const auto f = family_generate(Family::random_dense, static_cast<unsigned>(state.range(0)),
                                   16, 29);
    for (auto _ : state) {
        auto rep = isolate_benchmark(f);
        benchmark::DoNotOptimize(rep);
    }
}
BENCHMARK(BM_IsolateRandom)->DenseRange(4, 12, 4)->Unit(benchmark::kMillisecond);

void BM_SturmIsolate(benchmark::State& state) {
    const auto f = family_generate(Family::random_dense, static_cast<unsigned>(state.range(0)),
                                   16, 31);
    const auto g = square_free_part(f);
    const Dyadic b = root_bound(g);
    for (auto _ : state) {
        auto iso = sturm_isolate(g, Interval(-b, b));
        benchmark::DoNotOptimize(iso);
    }
}
BENCHMARK(BM_SturmIsolate)->DenseRange(4, 12, 4)->Unit(benchmark::kMillisecond);

void BM_ComplexRoots(benchmark::State& state) {
    const auto f = family_generate(Family::random_dense, static_cast<unsigned>(state.range(0)),
                                   16, 37);
    const auto g = square_free_part(f);
    for (auto _ : state) {
        auto roots = complex_roots(g);
        benchmark::DoNotOptimize(roots);
    }
}
BENCHMARK(BM_ComplexRoots)->DenseRange(4, 12, 4)->Unit(benchmark::kMillisecond);

void BM_BoundReport(benchmark::State& state) {
    const auto f = family_generate(Family::random_dense, static_cast<unsigned>(state.range(0)),
                                   12, 41);
    for (auto _ : state) {
        auto b = bound_report(f);
        benchmark::DoNotOptimize(b);
    }
}
BENCHMARK(BM_BoundReport)->DenseRange(4, 8, 4)->Unit(benchmark::kMillisecond);

} // namespace

BENCHMARK_MAIN();
