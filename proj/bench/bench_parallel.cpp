// Parallel vs serial verify suites.

#include <benchmark/benchmark.h>

#include "polylog/verify.hpp"

namespace {

void run(benchmark::State& state, const char* suite, bool parallel) {
  polylog::VerifyOptions o;
  o.parallel = parallel;
  for (auto _ : state) {
    auto r = polylog::run_suite(suite, o);
    benchmark::DoNotOptimize(r.cases);
    if (!r.ok()) state.SkipWithError(r.counterexample.c_str());
  }
}

}  // namespace

BENCHMARK_CAPTURE(run, polygon_d2_serial, "polygon-d2", false)->Unit(benchmark::kMillisecond);
BENCHMARK_CAPTURE(run, polygon_d2_parallel, "polygon-d2", true)->Unit(benchmark::kMillisecond);
BENCHMARK_CAPTURE(run, psi_dga_serial, "psi-dga", false)->Unit(benchmark::kMillisecond);
BENCHMARK_CAPTURE(run, psi_dga_parallel, "psi-dga", true)->Unit(benchmark::kMillisecond);
BENCHMARK_CAPTURE(run, bar_cocycle_serial, "bar-cocycle", false)->Unit(benchmark::kMillisecond);
BENCHMARK_CAPTURE(run, bar_cocycle_parallel, "bar-cocycle", true)->Unit(benchmark::kMillisecond);

BENCHMARK_MAIN();
