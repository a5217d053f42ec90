// Serial reference sweep against the OpenMP sweep over the same codes.

#include <benchmark/benchmark.h>

#include "triodrot/harness.hpp"

namespace {

using namespace triodrot;

std::vector<PatternCode> codes_up_to(std::size_t n) {
  std::vector<PatternCode> out;
  for (std::size_t m = 2; m <= n; ++m) {
    auto codes = enumerate_codes(m, n);
    out.insert(out.end(), codes.begin(), codes.end());
  }
  return out;
}

void BM_SweepSerial(benchmark::State& state) {
  auto codes = codes_up_to(static_cast<std::size_t>(state.range(0)));
  VerifyOptions options;
  options.parallel = false;
  for (auto _ : state) benchmark::DoNotOptimize(sweep_serial(codes, options));
  state.SetItemsProcessed(state.iterations() * static_cast<std::int64_t>(codes.size()));
}

void BM_SweepParallel(benchmark::State& state) {
  auto codes = codes_up_to(static_cast<std::size_t>(state.range(0)));
  VerifyOptions options;
  for (auto _ : state) benchmark::DoNotOptimize(sweep_parallel(codes, options));
  state.SetItemsProcessed(state.iterations() * static_cast<std::int64_t>(codes.size()));
}

}  // namespace

BENCHMARK(BM_SweepSerial)->Arg(5)->Arg(6)->Arg(7)->Unit(benchmark::kMillisecond)->UseRealTime();
BENCHMARK(BM_SweepParallel)->Arg(5)->Arg(6)->Arg(7)->Unit(benchmark::kMillisecond)->UseRealTime();

BENCHMARK_MAIN();
