// Serial vs OpenMP kernels. Run with OMP_NUM_THREADS set to compare.

#include <benchmark/benchmark.h>

#include "earclip/bridge.hpp"
#include "earclip/corpus.hpp"
#include "earclip/ear_clip.hpp"
#include "earclip/kernels.hpp"
#include "earclip/pipeline.hpp"

using namespace earclip;

namespace {

VertexRing ring_of(std::size_t n) {
    const auto poly = generate_corpus(42, 1, {n, n}, {0, 0}).front();
    return build_ring(poly.outer);
}

void BM_ClassifySerial(benchmark::State& state) {
    const auto base = ring_of(state.range(0));
    for (auto _ : state) {
        auto r = base;
        kernels::classify_ears_serial(r);
        benchmark::DoNotOptimize(r[0].is_ear);
    }
}

void BM_ClassifyParallel(benchmark::State& state) {
    const auto base = ring_of(state.range(0));
    for (auto _ : state) {
        auto r = base;
        kernels::classify_ears_parallel(r);
        benchmark::DoNotOptimize(r[0].is_ear);
    }
}

void BM_MinAnglesSerial(benchmark::State& state) {
    const auto t = triangulate_basic(ring_of(state.range(0)));
    for (auto _ : state) benchmark::DoNotOptimize(kernels::min_angles_serial(t));
}

void BM_MinAnglesParallel(benchmark::State& state) {
    const auto t = triangulate_basic(ring_of(state.range(0)));
    for (auto _ : state) benchmark::DoNotOptimize(kernels::min_angles_parallel(t));
}

void BM_Triangulate(benchmark::State& state) {
    const auto base = ring_of(state.range(0));
    for (auto _ : state) benchmark::DoNotOptimize(triangulate_basic(base).size());
    state.SetComplexityN(state.range(0));
}

void corpus_bench(benchmark::State& state, Execution exec) {
    const auto corpus = generate_corpus(42, 64, {20, 200}, {0, 2});
    std::vector<std::pair<std::string, RunConfig>> configs(1);
    configs[0].first = "basic";
    for (auto _ : state) benchmark::DoNotOptimize(evaluate_corpus(corpus, configs, exec));
}

void BM_CorpusSerial(benchmark::State& state) { corpus_bench(state, Execution::Serial); }
void BM_CorpusParallel(benchmark::State& state) { corpus_bench(state, Execution::Parallel); }

}  // namespace

BENCHMARK(BM_ClassifySerial)->Arg(500)->Arg(2000);
BENCHMARK(BM_ClassifyParallel)->Arg(500)->Arg(2000);
BENCHMARK(BM_MinAnglesSerial)->Arg(2000)->Arg(10000);
BENCHMARK(BM_MinAnglesParallel)->Arg(2000)->Arg(10000);
BENCHMARK(BM_Triangulate)->RangeMultiplier(2)->Range(250, 2000)->Complexity(benchmark::oNSquared);
BENCHMARK(BM_CorpusSerial)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_CorpusParallel)->Unit(benchmark::kMillisecond);

BENCHMARK_MAIN();
