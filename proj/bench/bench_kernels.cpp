#include <benchmark/benchmark.h>

#include "orelab/harness.hpp"

using namespace orelab;

namespace {

Execution mode(const benchmark::State& state) {
  return state.range(0) == 0 ? Execution::Serial : Execution::Parallel;
}

void label(benchmark::State& state) { state.SetLabel(state.range(0) == 0 ? "serial" : "parallel"); }

void BM_EnumerateGraphs(benchmark::State& state) {
  const int n = static_cast<int>(state.range(1));
  for (auto _ : state) benchmark::DoNotOptimize(enumerate_graph_level(n, mode(state)).size());
  label(state);
}
BENCHMARK(BM_EnumerateGraphs)->ArgsProduct({{0, 1}, {7, 8}})->Unit(benchmark::kMillisecond);

void BM_CensusCritical(benchmark::State& state) {
  const int k = static_cast<int>(state.range(1));
  for (auto _ : state) benchmark::DoNotOptimize(census_critical(9, k, mode(state)).size());
  label(state);
}
BENCHMARK(BM_CensusCritical)->ArgsProduct({{0, 1}, {4, 5}})->Unit(benchmark::kMillisecond);

void BM_Suite(benchmark::State& state, const char* id) {
  static const Corpus census = census_critical(9, 4);
  SuiteParams p;
  p.k = 4;
  p.exec = mode(state);
  for (auto _ : state) benchmark::DoNotOptimize(run_suite(id, census, p).passed);
  label(state);
}
BENCHMARK_CAPTURE(BM_Suite, charge_identity, "charge-identity")->Arg(0)->Arg(1)->Unit(benchmark::kMillisecond);
BENCHMARK_CAPTURE(BM_Suite, extension_potential, "extension-potential")
    ->Arg(0)
    ->Arg(1)
    ->Unit(benchmark::kMillisecond);

}  // namespace

BENCHMARK_MAIN();
