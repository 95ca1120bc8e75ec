#include <benchmark/benchmark.h>

#include "hypercol/codec.h"
#include "hypercol/construction.h"
#include "hypercol/q3.h"
#include "hypercol/search.h"

namespace hypercol {
namespace {

void BM_ClassifyAllQ3(benchmark::State& state) {
  for (auto _ : state) {
    int good = 0;
    for (Q3Colouring q = 0; q < kQ3Colourings; ++q) good += Classify(q).good();
    benchmark::DoNotOptimize(good);
  }
}
BENCHMARK(BM_ClassifyAllQ3)->Unit(benchmark::kMillisecond);

void BM_MinAntipodalChanges(benchmark::State& state) {
  const int n = static_cast<int>(state.range(0));
  // Worst case for the early exit: direction-split colourings never reach 0.
  const EdgeColouring c = EdgeColouring::FromFunction(
      n, [](Vertex, Direction d) { return d == 0 ? Colour::kRed : Colour::kBlue; });
  for (auto _ : state) benchmark::DoNotOptimize(MinAntipodalChanges(c).changes);
}
BENCHMARK(BM_MinAntipodalChanges)->DenseRange(6, 14, 2)->Unit(benchmark::kMillisecond);

void BM_MinChangesFromRandom(benchmark::State& state) {
  const int n = static_cast<int>(state.range(0));
  const EdgeColouring c = RandomColouring(n, 1);
  for (auto _ : state) benchmark::DoNotOptimize(MinChangesFrom(c, 0).changes);
}
BENCHMARK(BM_MinChangesFromRandom)->DenseRange(8, 20, 4)->Unit(benchmark::kMicrosecond);

void BM_ExactExpectation(benchmark::State& state) {
  const int n = static_cast<int>(state.range(0));
  const EdgeColouring c = RandomColouring(n, 2);
  for (auto _ : state) benchmark::DoNotOptimize(ExactExpectation(c, FVariant::kF1));
}
BENCHMARK(BM_ExactExpectation)->Arg(6)->Arg(9)->Arg(12)->Unit(benchmark::kMillisecond);

void BM_MonteCarlo(benchmark::State& state) {
  const EdgeColouring c = RandomColouring(9, 3);
  for (auto _ : state) benchmark::DoNotOptimize(MonteCarloMean(c, FVariant::kF1, 10000, 4).mean);
}
BENCHMARK(BM_MonteCarlo)->Unit(benchmark::kMillisecond);

}  // namespace
}  // namespace hypercol

BENCHMARK_MAIN();
