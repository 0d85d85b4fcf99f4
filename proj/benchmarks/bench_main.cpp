#include <benchmark/benchmark.h>

#include "fusion/groebner.hpp"
#include "fusion/ideal.hpp"
#include "fusion/quotient.hpp"
#include "fusion/symmetric.hpp"
#include "fusion/verlinde.hpp"

using namespace fusion;

static void BM_MPolyMul(benchmark::State& state) {
    int n = static_cast<int>(state.range(0));
    MPoly a = complete(6, n);
    MPoly b = elementary(n, n) + power_sum(4, n);
    for (auto _ : state) benchmark::DoNotOptimize(a * b);
}
BENCHMARK(BM_MPolyMul)->Arg(3)->Arg(4)->Arg(5);

static void BM_SchurBialternant(benchmark::State& state) {
    int n = static_cast<int>(state.range(0));
    Partition la({3, 2, 1});
    for (auto _ : state) benchmark::DoNotOptimize(schur(la, n));
}
BENCHMARK(BM_SchurBialternant)->Arg(3)->Arg(4);

static void BM_IdealPresentation(benchmark::State& state) {
    FunctorSpec spec = FunctorSpec::classical(3, static_cast<int>(state.range(0)));
    for (auto _ : state) benchmark::DoNotOptimize(ideal_presentation(spec));
}
BENCHMARK(BM_IdealPresentation)->Arg(1)->Arg(2)->Arg(3);

static void BM_BuchbergerClassical(benchmark::State& state) {
    FunctorSpec spec = FunctorSpec::classical(3, static_cast<int>(state.range(0)));
    IdealPresentation pres = ideal_presentation(spec);
    for (auto _ : state) benchmark::DoNotOptimize(buchberger(pres.elem_cn1, spec.rank - 1));
}
BENCHMARK(BM_BuchbergerClassical)->Arg(2)->Arg(4);

static void BM_KacWaltonTable(benchmark::State& state) {
    int k = static_cast<int>(state.range(0));
    for (auto _ : state) benchmark::DoNotOptimize(fusion_table(3, k));
}
BENCHMARK(BM_KacWaltonTable)->Arg(2)->Arg(3);

static void BM_QuotientBuild(benchmark::State& state) {
    FunctorSpec spec = FunctorSpec::classical(3, static_cast<int>(state.range(0)));
    IdealPresentation pres = ideal_presentation(spec);
    GroebnerBasis gb = buchberger(pres.elem_cn1, spec.rank - 1);
    for (auto _ : state) benchmark::DoNotOptimize(QuotientAlgebra::build(gb));
}
BENCHMARK(BM_QuotientBuild)->Arg(2)->Arg(3);

BENCHMARK_MAIN();
