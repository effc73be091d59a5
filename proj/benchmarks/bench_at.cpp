#include <benchmark/benchmark.h>

#include <hypat/harness.hpp>
#include <hypat/pipeline.hpp>

using namespace hypat;

namespace {

LinearSystem unbalanced_instance(int n, int m) {
    LinearSystem sys = random_instance(7, n, m, std::min(4, n), FieldDescriptor::rational());
    for (auto& row : sys.coeffs) {
        bool all_equal = true;
        for (const Scalar& s : row) all_equal = all_equal && s == row[0];
        if (all_equal)
            row.back() = row[0] == Scalar::one(sys.field) ? -Scalar::one(sys.field)
                                                          : Scalar::one(sys.field);
    }
    return sys;
}

void BM_alon_tarsi(benchmark::State& state) {
    LinearSystem sys = unbalanced_instance(static_cast<int>(state.range(0)),
                                           static_cast<int>(state.range(1)));
    for (auto _ : state) benchmark::DoNotOptimize(alon_tarsi_number(sys));
}

void BM_theorem_main(benchmark::State& state) {
    LinearSystem sys = unbalanced_instance(static_cast<int>(state.range(0)),
                                           static_cast<int>(state.range(1)));
    for (auto _ : state) benchmark::DoNotOptimize(theorem_main(sys));
}

void BM_span_route(benchmark::State& state) {
    LinearSystem sys = unbalanced_instance(static_cast<int>(state.range(0)),
                                           static_cast<int>(state.range(1)));
    for (auto _ : state) benchmark::DoNotOptimize(span_route(sys));
}

void BM_balanced_at(benchmark::State& state) {
    Hypergraph h = random_instance(7, static_cast<int>(state.range(0)),
                                   static_cast<int>(state.range(1)), 4,
                                   FieldDescriptor::rational())
                       .hypergraph;
    for (auto _ : state) benchmark::DoNotOptimize(fully_balanced_at(h, FieldDescriptor::rational()));
}

} // namespace

BENCHMARK(BM_alon_tarsi)->Args({6, 8})->Args({8, 10})->Args({8, 12});
BENCHMARK(BM_theorem_main)->Args({6, 8})->Args({8, 10})->Args({8, 12});
BENCHMARK(BM_span_route)->Args({6, 8})->Args({8, 10});
BENCHMARK(BM_balanced_at)->Args({8, 12})->Args({10, 16});

BENCHMARK_MAIN();
