#include <benchmark/benchmark.h>

#include <memory>

#include "transmute/moments.hpp"
#include "transmute/numeric.hpp"
#include "transmute/transmuted.hpp"

using namespace transmute;

static void BM_normal_quantile(benchmark::State& state) {
    double p = 1e-9;
    for (auto _ : state) {
        benchmark::DoNotOptimize(numeric::normal_quantile(p));
        p += 1e-6;
        if (p >= 1.0)
            p = 1e-9;
    }
}
BENCHMARK(BM_normal_quantile);

static void BM_poly_inverse(benchmark::State& state) {
    PolynomialRTM m(-1.2, 0.9);
    double u = 0.0;
    for (auto _ : state) {
        benchmark::DoNotOptimize(m.inverse(u));
        u += 1e-5;
        if (u >= 1.0)
            u = 0.0;
    }
}
BENCHMARK(BM_poly_inverse);

static void BM_sample(benchmark::State& state) {
    TransmutedDistribution d(std::make_shared<NormalBase>(),
                             std::make_shared<PolynomialRTM>(0.5, 0.5));
    for (auto _ : state) {
        auto xs = sample(d, {42, 0}, static_cast<std::size_t>(state.range(0)));
        benchmark::DoNotOptimize(xs.data());
    }
    state.SetItemsProcessed(state.iterations() * state.range(0));
}
BENCHMARK(BM_sample)->Arg(1024)->Arg(65536);

static void BM_quadrature_moment(benchmark::State& state) {
    TransmutedDistribution d(std::make_shared<NormalBase>(),
                             std::make_shared<PolynomialRTM>(0.5, 0.5));
    for (auto _ : state)
        benchmark::DoNotOptimize(quadrature_raw_moment(d, 4));
}
BENCHMARK(BM_quadrature_moment);

BENCHMARK_MAIN();
