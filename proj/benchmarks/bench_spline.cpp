#include <arcspline/optimize.hpp>
#include <arcspline/svg.hpp>

#include <benchmark/benchmark.h>

#include <cmath>
#include <vector>

using namespace arcspline;

namespace {

// zig-zag polygon with n vertices
SplineFamily make_family(int n) {
    std::vector<Vec2> pts;
    pts.reserve(n);
    for (int i = 0; i < n; ++i)
        pts.push_back({double(i), 0.3 * (i % 2)});
    return SplineFamily::from_polygon(std::move(pts), false);
}

} // namespace

static void BM_propagate(benchmark::State& state) {
    const auto fam = make_family(int(state.range(0)));
    for (auto _ : state)
        benchmark::DoNotOptimize(propagate(fam, 0.7));
    state.SetComplexityN(state.range(0));
}
BENCHMARK(BM_propagate)->Range(4, 1024)->Complexity(benchmark::oN);

static void BM_objective_value(benchmark::State& state) {
    const auto fam = make_family(int(state.range(0)));
    for (auto _ : state)
        benchmark::DoNotOptimize(
            objective_value(fam, 0.7, Objective::Energy));
}
BENCHMARK(BM_objective_value)->Range(4, 1024);

static void BM_smooth(benchmark::State& state) {
    const auto fam = make_family(int(state.range(0)));
    for (auto _ : state)
        benchmark::DoNotOptimize(smooth(fam, Objective::Energy));
}
BENCHMARK(BM_smooth)->Range(4, 256);

static void BM_render_svg(benchmark::State& state) {
    const auto fam = make_family(64);
    const Polyarc pa = propagate(fam, 0.7);
    for (auto _ : state)
        benchmark::DoNotOptimize(render_svg(pa));
}
BENCHMARK(BM_render_svg);

BENCHMARK_MAIN();
