// Serial reference against the OpenMP kernels. Arg 0 is serial, 1 parallel.
#include <benchmark/benchmark.h>

#include "qwb/graph.hpp"
#include "qwb/inequalities.hpp"
#include "qwb/pipeline.hpp"
#include "qwb/quartic.hpp"

using namespace qwb;

static void BM_PairSumScan(benchmark::State& state) {
  for (auto _ : state) benchmark::DoNotOptimize(pair_sum_scan(40, 120, state.range(0)));
}
BENCHMARK(BM_PairSumScan)->Arg(0)->Arg(1)->Unit(benchmark::kMillisecond);

static void BM_LongChainScan(benchmark::State& state) {
  for (auto _ : state) benchmark::DoNotOptimize(long_chain_scan(200, state.range(0)));
}
BENCHMARK(BM_LongChainScan)->Arg(0)->Arg(1)->Unit(benchmark::kMillisecond);

static void BM_SectionFeasibility(benchmark::State& state) {
  for (auto _ : state)
    benchmark::DoNotOptimize(feasibility_scan(FeasibilityForm::SectionBound, {30}, state.range(0)));
}
BENCHMARK(BM_SectionFeasibility)->Arg(0)->Arg(1)->Unit(benchmark::kMillisecond);

static void BM_EnumerateGraphs(benchmark::State& state) {
  for (auto _ : state) benchmark::DoNotOptimize(enumerate_graphs(7, state.range(0)));
}
BENCHMARK(BM_EnumerateGraphs)->Arg(0)->Arg(1)->Unit(benchmark::kMillisecond);

static void BM_LatticeScan(benchmark::State& state) {
  for (auto _ : state) benchmark::DoNotOptimize(modified_nf_lattice_scan(5, 4, 2, state.range(0)));
}
BENCHMARK(BM_LatticeScan)->Arg(0)->Arg(1)->Unit(benchmark::kMillisecond);

static void BM_PipelineBatch(benchmark::State& state) {
  for (auto _ : state) benchmark::DoNotOptimize(run_pipeline_batch(2000, 1, {}, state.range(0)));
}
BENCHMARK(BM_PipelineBatch)->Arg(0)->Arg(1)->Unit(benchmark::kMillisecond);

static void BM_FindLines(benchmark::State& state) {
  const QuarticData d = bundled_quartic();
  LineSearchOptions options;
  options.parallel = state.range(0);
  for (auto _ : state) benchmark::DoNotOptimize(find_lines(d, options));
}
BENCHMARK(BM_FindLines)->Arg(0)->Arg(1)->Unit(benchmark::kMillisecond);

BENCHMARK_MAIN();
