// Serial reference vs OpenMP kernels. Arg 0 = serial, 1 = parallel.

#include <benchmark/benchmark.h>

#include "octo/hopf.hpp"
#include "octo/projective.hpp"
#include "octo/properties.hpp"

using namespace octo;

namespace {

Execution mode(const benchmark::State& state) { return state.range(0) == 0 ? Execution::serial : Execution::parallel; }

void BM_ZeroDivisors(benchmark::State& state) {
  for (auto _ : state) benchmark::DoNotOptimize(find_zero_divisors(4, mode(state)));
}

void BM_AlternativeAudit(benchmark::State& state) {
  for (auto _ : state) {
    Rng rng(42);
    benchmark::DoNotOptimize(check_alternative(3, 1000, rng, mode(state)));
  }
}

void BM_FlexibleLevel5(benchmark::State& state) {
  for (auto _ : state) {
    Rng rng(42);
    benchmark::DoNotOptimize(check_flexible(5, 100, rng, mode(state)));
  }
}

void BM_GaussLinking(benchmark::State& state) {
  const auto fa = hopf_fiber({0.0, 0.0, 1.0}, 512);
  const auto fb = hopf_fiber({1.0, 0.0, 0.0}, 512);
  const Vec4 pole = pole_away_from(fa, fb);
  const auto a = stereographic_projection(fa, pole);
  const auto b = stereographic_projection(fb, pole);
  for (auto _ : state) benchmark::DoNotOptimize(gauss_linking_number(a, b, mode(state)));
}

void BM_ChartRoundtrip(benchmark::State& state) {
  for (auto _ : state) benchmark::DoNotOptimize(chart_roundtrip(3, 200, 42, kDefaultTolerance, mode(state)));
}

}  // namespace

BENCHMARK(BM_ZeroDivisors)->Arg(0)->Arg(1)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_AlternativeAudit)->Arg(0)->Arg(1)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_FlexibleLevel5)->Arg(0)->Arg(1)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_GaussLinking)->Arg(0)->Arg(1)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_ChartRoundtrip)->Arg(0)->Arg(1)->Unit(benchmark::kMillisecond);

BENCHMARK_MAIN();
