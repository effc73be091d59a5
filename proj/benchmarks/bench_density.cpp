#include <benchmark/benchmark.h>

#include <hypat/harness.hpp>
#include <hypat/hypergraph.hpp>

using namespace hypat;

namespace {

Hypergraph instance(int n, int m) {
    return random_instance(7, n, m, std::min(4, n), FieldDescriptor::rational()).hypergraph;
}

void BM_density_exact(benchmark::State& state) {
    Hypergraph h = instance(static_cast<int>(state.range(0)), static_cast<int>(state.range(1)));
    for (auto _ : state) benchmark::DoNotOptimize(edge_density_exact(h));
}

void BM_density_flow(benchmark::State& state) {
    Hypergraph h = instance(static_cast<int>(state.range(0)), static_cast<int>(state.range(1)));
    for (auto _ : state) benchmark::DoNotOptimize(edge_density_flow(h));
}

void BM_degeneracy(benchmark::State& state) {
    Hypergraph h = instance(static_cast<int>(state.range(0)), static_cast<int>(state.range(1)));
    for (auto _ : state) benchmark::DoNotOptimize(degeneracy(h));
}

} // namespace

BENCHMARK(BM_density_exact)->Args({8, 12})->Args({12, 18})->Args({16, 24})->Args({20, 30});
BENCHMARK(BM_density_flow)->Args({8, 12})->Args({12, 18})->Args({16, 24})->Args({20, 30})->Args({40, 60});
BENCHMARK(BM_degeneracy)->Args({12, 18})->Args({40, 60});

BENCHMARK_MAIN();
