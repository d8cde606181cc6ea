#include <benchmark/benchmark.h>

#include <array>

#include "etaxi/contour.hpp"
#include "etaxi/flows.hpp"
#include "etaxi/rng.hpp"

using namespace etaxi;

static void BM_Multiply(benchmark::State& state) {
    Rng rng(99);
    V0Point a = rng.point(2.0, 0.1);
    V0Point b = rng.point(2.0, 0.1);
    for (auto _ : state) {
        benchmark::DoNotOptimize(multiply(a, b));
    }
}
BENCHMARK(BM_Multiply);

static void BM_Inverse(benchmark::State& state) {
    Rng rng(99);
    V0Point a = rng.point(2.0, 0.1);
    for (auto _ : state) {
        benchmark::DoNotOptimize(inverse(a));
    }
}
BENCHMARK(BM_Inverse);

static void BM_ExpMap(benchmark::State& state) {
    Rng rng(99);
    AlgebraVector v = rng.algebra(2.0);
    for (auto _ : state) {
        benchmark::DoNotOptimize(exp_map(v));
    }
}
BENCHMARK(BM_ExpMap);

static void BM_LogMap(benchmark::State& state) {
    Rng rng(99);
    V0Point p = rng.point(2.0, 0.1);
    for (auto _ : state) {
        benchmark::DoNotOptimize(log_map(p));
    }
}
BENCHMARK(BM_LogMap);

static void BM_MetricValue(benchmark::State& state) {
    Rng rng(99);
    V0Point p = rng.point(2.0, 0.1);
    Tangent t = rng.tangent(2.0);
    for (auto _ : state) {
        benchmark::DoNotOptimize(metric_value(p, t));
    }
}
BENCHMARK(BM_MetricValue);

static void BM_PullbackResidual(benchmark::State& state) {
    AlgebraVector v{{0.3, -0.2}, {0.1, 0.4}};
    Immersion f = [v](std::span<const double> x) {
        return exp_map({v.z0 + x[0], v.z1 + x[1]});
    };
    FormMatrix expected{{{-1.0, 0.0}, {0.0, 0.0}}, {{0.0, 0.0}, {1.0, 0.0}}};
    std::array<double, 2> at{0.0, 0.0};
    for (auto _ : state) {
        benchmark::DoNotOptimize(pullback_residual(f, at, expected));
    }
}
BENCHMARK(BM_PullbackResidual);

static void BM_KillingResidual(benchmark::State& state) {
    Rng rng(99);
    AlgebraVector v{{1.0, 0.0}, {0.0, 0.0}};
    V0Point p = rng.point(2.0, 0.1);
    Tangent t = rng.tangent(2.0);
    for (auto _ : state) {
        benchmark::DoNotOptimize(killing_residual(v, p, t));
    }
}
BENCHMARK(BM_KillingResidual);

static void BM_CircleDistance(benchmark::State& state) {
    int n = static_cast<int>(state.range(0));
    for (auto _ : state) {
        benchmark::DoNotOptimize(circle_distance(0.5, 6.283185307179586,
                                                 0.0, n));
    }
    state.SetComplexityN(n);
}
BENCHMARK(BM_CircleDistance)->Arg(50)->Arg(100)->Arg(200)->Complexity();

BENCHMARK_MAIN();
