#include <benchmark/benchmark.h>

#include "hdmock/analytic.hpp"
#include "hdmock/bol.hpp"
#include "hdmock/gamma.hpp"
#include "hdmock/graded.hpp"
#include "hdmock/modular_forms.hpp"

using namespace hdmock;

static void BM_BasisSpace(benchmark::State& state) {
  const int k = static_cast<int>(state.range(0));
  const int p = static_cast<int>(state.range(1));
  for (auto _ : state) benchmark::DoNotOptimize(basis_space(k, p));
}
BENCHMARK(BM_BasisSpace)->Args({12, 0})->Args({48, 0})->Args({-10, 2})->Args({-20, 3});

static void BM_SeriesInvert(benchmark::State& state) {
  const QSeries d = delta(static_cast<int>(state.range(0)));
  for (auto _ : state) benchmark::DoNotOptimize(series_invert(d));
}
BENCHMARK(BM_SeriesInvert)->Range(16, 256);

static void BM_BolQuotient(benchmark::State& state) {
  const int k = static_cast<int>(state.range(0));
  for (auto _ : state) benchmark::DoNotOptimize(bol_quotient_dim(k, 3));
}
BENCHMARK(BM_BolQuotient)->DenseRange(2, 20, 6);

static void BM_H1Dim(benchmark::State& state) {
  const int k = static_cast<int>(state.range(0));
  for (auto _ : state) benchmark::DoNotOptimize(h1_dim(k));
}
BENCHMARK(BM_H1Dim)->Arg(10)->Arg(20)->Arg(40);

static void BM_PeriodPolynomial(benchmark::State& state) {
  const QSeries d = delta(60);
  for (auto _ : state) benchmark::DoNotOptimize(period_polynomial(d, 10));
}
BENCHMARK(BM_PeriodPolynomial);

static void BM_EichlerStar(benchmark::State& state) {
  const QSeries d = delta(80);
  const HPoint tau(0.5, 1.0);
  for (auto _ : state) benchmark::DoNotOptimize(eichler_star(d, 10, tau));
}
BENCHMARK(BM_EichlerStar);

static void BM_GrDims(benchmark::State& state) {
  const int cutoff = static_cast<int>(state.range(0));
  for (auto _ : state) benchmark::DoNotOptimize(gr_dims(Variant::holomorphic(), cutoff, -24, 24, 3));
}
BENCHMARK(BM_GrDims)->Arg(12)->Arg(24);

BENCHMARK_MAIN();
