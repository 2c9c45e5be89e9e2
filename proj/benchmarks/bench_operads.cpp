#include <benchmark/benchmark.h>

#include "antiassoc/operad.hpp"
#include "antiassoc/power_series.hpp"

using namespace antiassoc;

static void BM_ComponentDims(benchmark::State& state) {
  const auto p = operad_preset(state.range(0) == 0 ? "aass" : "jajo");
  for (auto _ : state) benchmark::DoNotOptimize(component_dims(p, 5));
}
BENCHMARK(BM_ComponentDims)->Arg(0)->Arg(1)->Unit(benchmark::kMillisecond);

static void BM_KoszulSignTest(benchmark::State& state) {
  const auto p = operad_preset("jajo");
  for (auto _ : state) benchmark::DoNotOptimize(koszul_sign_test(p, 9));
}
BENCHMARK(BM_KoszulSignTest)->Unit(benchmark::kMillisecond);

static void BM_SeriesInverse(benchmark::State& state) {
  const auto order = static_cast<std::size_t>(state.range(0));
  PowerSeries g{{-1, 1, -1}};
  g.coeffs.resize(order, 0);
  for (auto _ : state) benchmark::DoNotOptimize(series_inverse(g, order));
}
BENCHMARK(BM_SeriesInverse)->Arg(9)->Arg(20);
