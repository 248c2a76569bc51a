#include <benchmark/benchmark.h>

#include "rainbow/decompose.hpp"
#include "rainbow/extend.hpp"
#include "rainbow/generate.hpp"
#include "rainbow/oracle.hpp"
#include "rainbow/random.hpp"

using namespace rainbow;

namespace {

EdgeColouredGraph colour_degree_instance(int k, std::uint64_t seed) {
    GenSpec s;
    s.model = Model::min_colour_degree;
    s.k = k;
    s.n = (7 * k + 5) / 2;
    s.colours = k;
    s.p = 0.5;
    s.seed = seed;
    return generate(s);
}

void BM_Theorem1(benchmark::State& state) {
    const int k = static_cast<int>(state.range(0));
    const auto g = colour_degree_instance(k, 1);
    for (auto _ : state) benchmark::DoNotOptimize(theorem1(g, k));
    state.SetComplexityN(k);
}
BENCHMARK(BM_Theorem1)->RangeMultiplier(2)->Range(4, 64)->Complexity();

void BM_Decompose(benchmark::State& state) {
    GenSpec s;
    s.model = Model::mono_budget;
    s.n = static_cast<int>(state.range(0));
    s.t = 11;
    s.colours = 4;
    s.p = 0.9;
    s.seed = 2;
    const auto g = generate(s);
    for (auto _ : state) benchmark::DoNotOptimize(decompose(g, 11));
    state.SetComplexityN(s.n);
}
BENCHMARK(BM_Decompose)->RangeMultiplier(2)->Range(8, 64)->Complexity();

void BM_Sharpness(benchmark::State& state) {
    const int n = static_cast<int>(state.range(0));
    const auto g = sharpness_instance(11, n);
    for (auto _ : state) benchmark::DoNotOptimize(decompose(g, 11));
}
BENCHMARK(BM_Sharpness)->Arg(12)->Arg(24)->Arg(48);

void BM_ExactOracle(benchmark::State& state) {
    GenSpec s;
    s.model = Model::uniform;
    s.n = static_cast<int>(state.range(0));
    s.colours = s.n / 2;
    s.p = 0.5;
    s.seed = 3;
    const auto g = generate(s);
    for (auto _ : state) benchmark::DoNotOptimize(max_rainbow_matching_exact(g));
}
BENCHMARK(BM_ExactOracle)->DenseRange(6, 14, 4);

void BM_HopcroftKarp(benchmark::State& state) {
    const int n = static_cast<int>(state.range(0));
    SplitMix64 rng(4);
    BipartiteAssignment base;
    base.right = n;
    base.adjacency.resize(static_cast<std::size_t>(n));
    for (auto& row : base.adjacency) {
        for (int s = 0; s < n; ++s) {
            if (rng.below(8) == 0) row.push_back(s);
        }
    }
    for (auto _ : state) {
        BipartiteAssignment b = base;
        max_bipartite_matching(b);
        benchmark::DoNotOptimize(b.assigned.data());
    }
}
BENCHMARK(BM_HopcroftKarp)->RangeMultiplier(4)->Range(16, 1024);

}  // namespace

BENCHMARK_MAIN();
