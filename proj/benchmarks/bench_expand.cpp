#include <benchmark/benchmark.h>

#include <hypat/harness.hpp>
#include <hypat/polynomial.hpp>

using namespace hypat;

namespace {

LinearSystem instance(int n, int m) {
    return random_instance(7, n, m, std::min(4, n), FieldDescriptor::rational());
}

void BM_expand_full(benchmark::State& state) {
    LinearSystem sys = instance(static_cast<int>(state.range(0)), static_cast<int>(state.range(1)));
    for (auto _ : state)
        benchmark::DoNotOptimize(expand_truncated(sys, std::nullopt, kDefaultTermBudget));
}

void BM_expand_capped(benchmark::State& state) {
    LinearSystem sys = instance(static_cast<int>(state.range(0)), static_cast<int>(state.range(1)));
    int cap = static_cast<int>(state.range(2));
    for (auto _ : state)
        benchmark::DoNotOptimize(expand_truncated(sys, cap, kDefaultTermBudget));
}

void BM_coefficient_of(benchmark::State& state) {
    LinearSystem sys = instance(static_cast<int>(state.range(0)), static_cast<int>(state.range(1)));
    // degree-m monomial spread round-robin over the variables
    std::vector<int> exps(static_cast<std::size_t>(sys.hypergraph.n) + 1, 0);
    for (std::size_t e = 0; e < sys.hypergraph.edges.size(); ++e)
        ++exps[static_cast<std::size_t>(1 + static_cast<int>(e) % sys.hypergraph.n)];
    std::vector<std::pair<int, int>> pairs;
    for (int v = 1; v <= sys.hypergraph.n; ++v)
        if (exps[static_cast<std::size_t>(v)] > 0) pairs.emplace_back(v, exps[static_cast<std::size_t>(v)]);
    Monomial target = Monomial::from_pairs(pairs);
    for (auto _ : state) benchmark::DoNotOptimize(coefficient_of(sys, target));
}

} // namespace

BENCHMARK(BM_expand_full)->Args({8, 8})->Args({8, 12})->Args({10, 14});
BENCHMARK(BM_expand_capped)->Args({8, 12, 2})->Args({8, 12, 3})->Args({10, 14, 2});
BENCHMARK(BM_coefficient_of)->Args({8, 12})->Args({10, 14});

BENCHMARK_MAIN();
