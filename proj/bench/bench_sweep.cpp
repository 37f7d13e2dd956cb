#include <benchmark/benchmark.h>

#include "oscfreq/model.hpp"
#include "oscfreq/sweep.hpp"

namespace {

using namespace oscfreq;

const std::vector<Method> kMethods = {Method{MethodKind::Iaff}, Method{MethodKind::Hb1},
                                      Method{MethodKind::ExactOde}};

std::vector<double> grid(benchmark::State& state) {
  return amplitude_grid(0.05, 10.0, static_cast<int>(state.range(0)), true);
}

void BM_SweepSerial(benchmark::State& state) {
  const OscillatorSpec spec = preset("stretched-wire", {{"lambda", 0.5}});
  const auto amps = grid(state);
  for (auto _ : state) benchmark::DoNotOptimize(evaluate_sweep_serial(spec, amps, kMethods, {}));
  state.SetItemsProcessed(state.iterations() * state.range(0));
}

void BM_SweepParallel(benchmark::State& state) {
  const OscillatorSpec spec = preset("stretched-wire", {{"lambda", 0.5}});
  const auto amps = grid(state);
  for (auto _ : state) benchmark::DoNotOptimize(evaluate_sweep(spec, amps, kMethods, {}));
  state.SetItemsProcessed(state.iterations() * state.range(0));
}

}  // namespace

BENCHMARK(BM_SweepSerial)->Arg(16)->Arg(64)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_SweepParallel)->Arg(16)->Arg(64)->Unit(benchmark::kMillisecond);

BENCHMARK_MAIN();
