#include "schatten/estimator.hpp"
#include "schatten/psd.hpp"
#include "schatten/rng.hpp"

#include <benchmark/benchmark.h>

using namespace schatten;

namespace {

SymmetricMatrix bench_matrix(int d) {
    Rng rng(99);
    SymmetricMatrix m(d);
    for (int i = 0; i < d; ++i)
        for (int j = i; j < d; ++j) m.set(i, j, rng.uniform(-1.0, 1.0));
    return m;
}

void bm_gamma_closed_form(benchmark::State& state) {
    const int d = static_cast<int>(state.range(0));
    const int k = static_cast<int>(state.range(1));
    const auto m = bench_matrix(d);
    for (auto _ : state) benchmark::DoNotOptimize(gamma_closed_form(m, k));
}

void bm_gamma_oracle(benchmark::State& state) {
    const int d = static_cast<int>(state.range(0));
    const int k = static_cast<int>(state.range(1));
    const auto m = bench_matrix(d);
    for (auto _ : state) benchmark::DoNotOptimize(gamma_oracle(m, k));
}

void bm_estimate_er(benchmark::State& state) {
    const int d = static_cast<int>(state.range(0));
    const int k = static_cast<int>(state.range(1));
    auto [m, model] = generate_psd(d, d / 5, SingularValueLaw::uniform(1.0, 2.0), 1);
    const double p = 0.2;
    const auto sample = sample_er(m, p, 2);
    const DebiasTable debias = debias_er(k, p);
    EstimatorOptions opts;
    opts.debias = &debias;
    for (auto _ : state)
        benchmark::DoNotOptimize(
            estimate_schatten(sample, SamplingModel::erdos_renyi(p), k, opts));
}

void bm_debias_graph(benchmark::State& state) {
    const int d = static_cast<int>(state.range(0));
    const auto pattern = clique_pattern(d, d / 4, true);
    for (auto _ : state) benchmark::DoNotOptimize(debias_graph(5, pattern));
}

} // namespace

BENCHMARK(bm_gamma_closed_form)
    ->Args({100, 5})
    ->Args({100, 7})
    ->Args({200, 5})
    ->Args({200, 7})
    ->Args({400, 7})
    ->Unit(benchmark::kMillisecond);
BENCHMARK(bm_gamma_oracle)->Args({8, 5})->Args({8, 7})->Unit(benchmark::kMillisecond);
BENCHMARK(bm_estimate_er)->Args({200, 5})->Args({200, 7})->Unit(benchmark::kMillisecond);
BENCHMARK(bm_debias_graph)->Args({200})->Unit(benchmark::kMillisecond);

BENCHMARK_MAIN();
