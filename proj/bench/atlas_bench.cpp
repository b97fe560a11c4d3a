#include "sparsemult/atlas.hpp"

#include <benchmark/benchmark.h>
#include <omp.h>

using namespace sparsemult;

static void BM_TriangleAtlasSerial(benchmark::State& state) {
    for (auto _ : state) benchmark::DoNotOptimize(triangle_atlas_serial(state.range(0)).has_inflection);
}
static void BM_TriangleAtlasParallel(benchmark::State& state) {
    state.counters["threads"] = omp_get_max_threads();
    for (auto _ : state) benchmark::DoNotOptimize(triangle_atlas_parallel(state.range(0)).has_inflection);
}
BENCHMARK(BM_TriangleAtlasSerial)->Arg(5)->Arg(7)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_TriangleAtlasParallel)->Arg(5)->Arg(7)->Unit(benchmark::kMillisecond);

static void BM_PairAtlasSerial(benchmark::State& state) {
    for (auto _ : state) benchmark::DoNotOptimize(pair_atlas_serial(state.range(0)).verified);
}
static void BM_PairAtlasParallel(benchmark::State& state) {
    state.counters["threads"] = omp_get_max_threads();
    for (auto _ : state) benchmark::DoNotOptimize(pair_atlas_parallel(state.range(0)).verified);
}
BENCHMARK(BM_PairAtlasSerial)->Arg(2)->Arg(3)->Iterations(1)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_PairAtlasParallel)->Arg(2)->Arg(3)->Iterations(1)->Unit(benchmark::kMillisecond);

BENCHMARK_MAIN();
