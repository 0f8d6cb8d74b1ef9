#include <benchmark/benchmark.h>

#include "crossbessel/bessel.hpp"
#include "crossbessel/coeff_table.hpp"
#include "crossbessel/elimination.hpp"
#include "crossbessel/spectrum.hpp"

using namespace crossbessel;

static void BM_EvalW(benchmark::State& state) {
  const PrecisionConfig cfg = PrecisionConfig::with_bits(static_cast<int>(state.range(0)));
  for (auto _ : state) benchmark::DoNotOptimize(eval_W(5, 17.25, cfg));
}
BENCHMARK(BM_EvalW)->Arg(128)->Arg(256)->Arg(512)->Arg(1024);

static void BM_CoeffTable(benchmark::State& state) {
  const int n = static_cast<int>(state.range(0));
  for (auto _ : state) {
    CoeffTable table;
    table.prefill(-10, 10, n);
    benchmark::DoNotOptimize(table.size());
  }
}
BENCHMARK(BM_CoeffTable)->Arg(4)->Arg(8);

static void BM_Eliminate(benchmark::State& state) {
  const int depth = static_cast<int>(state.range(0));
  const TripleIndex t = TripleIndex::make(0, depth + 2, 2 * depth + 4);
  for (auto _ : state) {
    CoeffTable table;
    benchmark::DoNotOptimize(eliminate(t, table));
  }
}
BENCHMARK(BM_Eliminate)->Arg(0)->Arg(2)->Arg(4);

static void BM_FindZeros(benchmark::State& state) {
  const PrecisionConfig cfg{};
  for (auto _ : state) benchmark::DoNotOptimize(find_zeros(static_cast<int>(state.range(0)), 40.0, cfg));
}
BENCHMARK(BM_FindZeros)->Arg(0)->Arg(8)->Unit(benchmark::kMillisecond);

BENCHMARK_MAIN();
