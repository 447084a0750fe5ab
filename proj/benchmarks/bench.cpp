#include <benchmark/benchmark.h>

#include "jradii/gsb.hpp"
#include "jradii/verify.hpp"

#include <random>

using namespace jradii;

static void BM_MinEnclosingBall(benchmark::State& state) {
    const int n = static_cast<int>(state.range(0));
    const int dim = static_cast<int>(state.range(1));
    std::mt19937_64 rng(7);
    std::normal_distribution<double> gauss;
    std::vector<Vec> pts;
    for (int i = 0; i < n; ++i) {
        Vec p(dim);
        for (int k = 0; k < dim; ++k) p[k] = gauss(rng);
        pts.push_back(std::move(p));
    }
    for (auto _ : state) benchmark::DoNotOptimize(min_enclosing_ball(pts));
}
BENCHMARK(BM_MinEnclosingBall)->Args({26, 8})->Args({26, 25})->Args({200, 8});

static void BM_SynthesizeGsb(benchmark::State& state) {
    const int d = static_cast<int>(state.range(0));
    const int j = d / 2 - 1;
    for (auto _ : state) benchmark::DoNotOptimize(synthesize_gsb(j, d));
}
BENCHMARK(BM_SynthesizeGsb)->Arg(9)->Arg(15)->Arg(25);

static void BM_ExistsTable(benchmark::State& state) {
    const int max_d = static_cast<int>(state.range(0));
    for (auto _ : state) {
        for (int d = 1; d <= max_d; ++d)
            for (int j = 1; j <= d; ++j) benchmark::DoNotOptimize(exists_gsb(j, d).verdict);
    }
}
BENCHMARK(BM_ExistsTable)->Arg(16)->Arg(100);

static void BM_ProjectSimplex(benchmark::State& state) {
    const int d = static_cast<int>(state.range(0));
    SubsetBasis b = synthesize_gsb(d - 1, d);
    for (auto _ : state) benchmark::DoNotOptimize(project_simplex(b).circumradius);
}
BENCHMARK(BM_ProjectSimplex)->Arg(9)->Arg(21);

BENCHMARK_MAIN();
