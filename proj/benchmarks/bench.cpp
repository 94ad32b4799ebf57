#include <benchmark/benchmark.h>

#include "mubkit/constructors.hpp"
#include "mubkit/designs.hpp"
#include "mubkit/measures.hpp"
#include "mubkit/qkd.hpp"

using namespace mubkit;

static void BM_PrimeMubs(benchmark::State& state) {
    const int p = static_cast<int>(state.range(0));
    for (auto _ : state) {
        auto s = prime_mubs(p);
        benchmark::DoNotOptimize(s);
    }
}
BENCHMARK(BM_PrimeMubs)->Arg(5)->Arg(13)->Arg(31);

static void BM_OverlapTable(benchmark::State& state) {
    auto set = rbd_to_bases(q2_minus_1_design(7)).set;  // d = 48
    for (auto _ : state) {
        auto t = overlap_table(set.bases[0], set.bases[1]);
        benchmark::DoNotOptimize(t);
    }
}
BENCHMARK(BM_OverlapTable);

static void BM_MeasureSet(benchmark::State& state) {
    auto set = rbd_to_bases(resolvable_transversal_design(7, 8)).set;  // d = 56, r = 8
    for (auto _ : state) {
        auto rep = measure_set(set);
        benchmark::DoNotOptimize(rep);
    }
}
BENCHMARK(BM_MeasureSet);

static void BM_FramePotential(benchmark::State& state) {
    auto vecs = collect_vectors(prime_mubs(5));
    for (auto _ : state) benchmark::DoNotOptimize(frame_potential(vecs, 2.0));
}
BENCHMARK(BM_FramePotential);

static void BM_GramLogVolume(benchmark::State& state) {
    auto set = prime_mubs(5);
    for (auto _ : state) benchmark::DoNotOptimize(gram_log_volume(set));
}
BENCHMARK(BM_GramLogVolume);

static void BM_InterceptResend(benchmark::State& state) {
    auto set = weak_mubs(2, 3);
    for (auto _ : state)
        benchmark::DoNotOptimize(intercept_resend_sift_error(set, state.range(0), 11));
    state.SetItemsProcessed(state.iterations() * state.range(0));
}
BENCHMARK(BM_InterceptResend)->Arg(10000)->Arg(100000);

static void BM_Q2m1Design(benchmark::State& state) {
    const int q = static_cast<int>(state.range(0));
    for (auto _ : state) {
        auto d = q2_minus_1_design(q);
        benchmark::DoNotOptimize(d);
    }
}
BENCHMARK(BM_Q2m1Design)->Arg(7)->Arg(11)->Arg(19);

BENCHMARK_MAIN();
