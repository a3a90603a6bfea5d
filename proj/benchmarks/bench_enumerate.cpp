#include <benchmark/benchmark.h>

#include "latwalk/analysis.hpp"
#include "latwalk/construct.hpp"
#include "latwalk/enumerate.hpp"

using namespace latwalk;

static void BM_saw_z2(benchmark::State& state) {
    GraphModel g = make_graph("Z2");
    EnumOptions o;
    o.workers = static_cast<int>(state.range(1));
    const int n = static_cast<int>(state.range(0));
    std::uint64_t walks = 0;
    for (auto _ : state) {
        auto s = count_saws(g, n, o);
        walks = s.at(n).to_u64();
        benchmark::DoNotOptimize(walks);
    }
    state.counters["walks/s"] = benchmark::Counter(static_cast<double>(walks),
                                                   benchmark::Counter::kIsIterationInvariantRate);
}
BENCHMARK(BM_saw_z2)->Args({10, 1})->Args({12, 1})->Args({12, 4})->Args({14, 4})
    ->Unit(benchmark::kMillisecond);

static void BM_saw_hex(benchmark::State& state) {
    GraphModel g = make_graph("hex");
    const int n = static_cast<int>(state.range(0));
    for (auto _ : state) benchmark::DoNotOptimize(count_saws(g, n).at(n).to_u64());
}
BENCHMARK(BM_saw_hex)->Arg(12)->Arg(16)->Unit(benchmark::kMillisecond);

static void BM_bridges_z2(benchmark::State& state) {
    GraphModel g = make_graph("Z2");
    HeightFunction h = height_for(g, "x");
    const int n = static_cast<int>(state.range(0));
    for (auto _ : state) benchmark::DoNotOptimize(count_bridges(g, h, n).at(n).to_u64());
}
BENCHMARK(BM_bridges_z2)->Arg(10)->Arg(14)->Unit(benchmark::kMillisecond);

static void BM_saw_tree_generic_engine(benchmark::State& state) {
    GraphModel g = make_graph("T3");
    const int n = static_cast<int>(state.range(0));
    for (auto _ : state) benchmark::DoNotOptimize(count_saws(g, n).at(n).to_u64());
}
BENCHMARK(BM_saw_tree_generic_engine)->Arg(12)->Arg(16)->Unit(benchmark::kMillisecond);

static void BM_identity_check(benchmark::State& state) {
    GraphModel g = make_graph("Z2");
    const int n = static_cast<int>(state.range(0));
    for (auto _ : state) benchmark::DoNotOptimize(identity_check(g, n).rows.size());
}
BENCHMARK(BM_identity_check)->Arg(10)->Arg(12)->Unit(benchmark::kMillisecond);

static void BM_polygon_assembly(benchmark::State& state) {
    GraphModel g = make_graph("Z2");
    HeightFunction h = height_for(g, "x");
    AutomorphismAction rho = rho_for(g, "yshift");
    StiffPathTable stiff = compute_stiff_paths(g, h, 32);
    for (auto _ : state) {
        TubeSpec tube = build_tube(g, h, stiff, 2);
        auto rows = arithmetic_subsequence(g, h, tube, rho, 5, 2, 2);
        benchmark::DoNotOptimize(rows.back().distinct_polygons.to_u64());
    }
}
BENCHMARK(BM_polygon_assembly)->Unit(benchmark::kMillisecond);

BENCHMARK_MAIN();
