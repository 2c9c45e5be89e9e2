#include <benchmark/benchmark.h>

#include "antiassoc/cohomology.hpp"
#include "antiassoc/fixtures.hpp"
#include "antiassoc/free_algebras.hpp"
#include "antiassoc/homology.hpp"
#include "antiassoc/operators.hpp"

using namespace antiassoc;

static void BM_FreeAntiAssociative(benchmark::State& state) {
  const auto k = static_cast<std::size_t>(state.range(0));
  for (auto _ : state) benchmark::DoNotOptimize(free_anti_associative(k));
}
BENCHMARK(BM_FreeAntiAssociative)->DenseRange(1, 3)->Unit(benchmark::kMillisecond);

static void BM_AntiDerivations(benchmark::State& state) {
  const Algebra& a = fixture(state.range(0) == 1 ? "faa1" : "faa2").algebra;
  for (auto _ : state) benchmark::DoNotOptimize(anti_derivation_space(a));
}
BENCHMARK(BM_AntiDerivations)->Arg(1)->Arg(2)->Unit(benchmark::kMillisecond);

static void BM_Derivations(benchmark::State& state) {
  const Algebra& a = fixture("faa2").algebra;
  for (auto _ : state) benchmark::DoNotOptimize(derivation_space(a));
}
BENCHMARK(BM_Derivations)->Unit(benchmark::kMillisecond);

static void BM_Homology(benchmark::State& state) {
  const Algebra& a = fixture("faa1").algebra;
  const auto q = static_cast<std::size_t>(state.range(0));
  for (auto _ : state) benchmark::DoNotOptimize(homology(a, q, SignConvention::Symmetric));
}
BENCHMARK(BM_Homology)->DenseRange(0, 2)->Unit(benchmark::kMillisecond);

static void BM_StandardCohomology(benchmark::State& state) {
  const Algebra& a = fixture("faa1").algebra;
  for (auto _ : state) benchmark::DoNotOptimize(standard_cohomology_dims(a));
}
BENCHMARK(BM_StandardCohomology)->Unit(benchmark::kMillisecond);

static void BM_Delta3Delta2(benchmark::State& state) {
  const Algebra& a = fixture("faa1").algebra;
  for (auto _ : state) benchmark::DoNotOptimize(check_delta3_delta2(a));
}
BENCHMARK(BM_Delta3Delta2)->Unit(benchmark::kMillisecond);
