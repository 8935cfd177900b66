#include <benchmark/benchmark.h>

#include "pidom/families.hpp"
#include "pidom/family_spec.hpp"
#include "pidom/solver.hpp"

namespace {

using pidom::DominationVariant;

void BM_SolvePath(benchmark::State& state) {
    pidom::Graph g = pidom::path_graph(static_cast<int>(state.range(0)));
    for (auto _ : state)
        benchmark::DoNotOptimize(pidom::solve(g, DominationVariant::PerfectItalian));
}
BENCHMARK(BM_SolvePath)->Arg(8)->Arg(12)->Arg(16)->Arg(20);

void BM_SolveGrid2xN(benchmark::State& state) {
    pidom::Graph g = pidom::cartesian_product(
        pidom::path_graph(2), pidom::path_graph(static_cast<int>(state.range(0))));
    for (auto _ : state)
        benchmark::DoNotOptimize(pidom::solve(g, DominationVariant::PerfectItalian));
}
BENCHMARK(BM_SolveGrid2xN)->Arg(4)->Arg(6)->Arg(8);

void BM_SolveCompleteProduct(benchmark::State& state) {
    int n = static_cast<int>(state.range(0));
    pidom::Graph g =
        pidom::cartesian_product(pidom::complete_graph(n), pidom::complete_graph(n));
    for (auto _ : state)
        benchmark::DoNotOptimize(pidom::solve(g, DominationVariant::PerfectItalian));
}
BENCHMARK(BM_SolveCompleteProduct)->Arg(3)->Arg(4);

void BM_SolveVariants(benchmark::State& state) {
    auto variant = static_cast<DominationVariant>(state.range(0));
    pidom::Graph g = pidom::cycle_graph(12);
    for (auto _ : state) benchmark::DoNotOptimize(pidom::solve(g, variant));
}
BENCHMARK(BM_SolveVariants)->DenseRange(0, 3);

void BM_EnumerateOptimaPath(benchmark::State& state) {
    pidom::Graph g = pidom::path_graph(static_cast<int>(state.range(0)));
    for (auto _ : state)
        benchmark::DoNotOptimize(
            pidom::enumerate_optima(g, DominationVariant::PerfectItalian, 1 << 20));
}
BENCHMARK(BM_EnumerateOptimaPath)->Arg(8)->Arg(12);

} // namespace

BENCHMARK_MAIN();
