#include <benchmark/benchmark.h>

#include "clustercolor/bounds.hpp"
#include "clustercolor/generators.hpp"
#include "clustercolor/oracle.hpp"
#include "clustercolor/three_coloring.hpp"
#include "clustercolor/triangulate.hpp"

namespace cc = clustercolor;

namespace {

void BM_ColorGrid(benchmark::State& state) {
    auto g = cc::generators::triangular_grid(static_cast<int>(state.range(0)));
    for (auto _ : state) {
        cc::Coloring c = cc::color_planar(g);
        benchmark::DoNotOptimize(c);
    }
}
BENCHMARK(BM_ColorGrid)->Arg(4)->Arg(8)->Arg(12)->Arg(16);

void BM_ColorRandomTriangulation(benchmark::State& state) {
    auto g = cc::generators::random_near_triangulation(
        static_cast<int>(state.range(0)), 42);
    for (auto _ : state) {
        cc::Coloring c = cc::color_planar(g);
        benchmark::DoNotOptimize(c);
    }
}
BENCHMARK(BM_ColorRandomTriangulation)->Arg(50)->Arg(100)->Arg(200);

void BM_NearTriangulate(benchmark::State& state) {
    auto g = cc::generators::random_plane_graph(static_cast<int>(state.range(0)), 7,
                                                0.35);
    for (auto _ : state) {
        cc::Augmentation a = cc::near_triangulate(g);
        benchmark::DoNotOptimize(a);
    }
}
BENCHMARK(BM_NearTriangulate)->Arg(50)->Arg(150);

void BM_OracleGrid3(benchmark::State& state) {
    auto g = cc::generators::triangular_grid(3);
    for (auto _ : state) {
        auto res = cc::oracle::min_max_component(g.rotations(), 2);
        benchmark::DoNotOptimize(res);
    }
}
BENCHMARK(BM_OracleGrid3);

void BM_FinalBound(benchmark::State& state) {
    for (auto _ : state) {
        cc::BigCount b = cc::bounds::final_bound(static_cast<int>(state.range(0)));
        benchmark::DoNotOptimize(b);
    }
}
BENCHMARK(BM_FinalBound)->Arg(6)->Arg(20);

}  // namespace

BENCHMARK_MAIN();
