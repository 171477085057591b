#include <arcspline/arc.hpp>

#include <benchmark/benchmark.h>

#include <numbers>

using namespace arcspline;

static void BM_point_at(benchmark::State& state) {
    const Vec2 c{2.0, 1.0};
    double u = 0.0;
    for (auto _ : state) {
        u = u < 1.0 ? u + 1e-7 : 0.0;
        benchmark::DoNotOptimize(point_at(c, 2.5, u));
    }
}
BENCHMARK(BM_point_at);

static void BM_point_at_small_theta(benchmark::State& state) {
    const Vec2 c{2.0, 1.0};
    for (auto _ : state)
        benchmark::DoNotOptimize(point_at(c, 1e-9, 0.5));
}
BENCHMARK(BM_point_at_small_theta);

static void BM_arc_length(benchmark::State& state) {
    for (auto _ : state)
        benchmark::DoNotOptimize(arc_length(2.2360679, 2.5, 1.0));
}
BENCHMARK(BM_arc_length);

static void BM_segment_area(benchmark::State& state) {
    for (auto _ : state)
        benchmark::DoNotOptimize(segment_area(2.2360679, 2.5));
}
BENCHMARK(BM_segment_area);

static void BM_to_center_params(benchmark::State& state) {
    const ArcSeg arc{{0, 0}, {2, 1}, 2.5};
    for (auto _ : state)
        benchmark::DoNotOptimize(to_center_params(arc));
}
BENCHMARK(BM_to_center_params);

BENCHMARK_MAIN();
