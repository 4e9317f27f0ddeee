#include <benchmark/benchmark.h>

#include <numbers>
#include <vector>

#include "ctcog/grover.hpp"

namespace {

using namespace ctcog;

void BM_SearchSweeps(benchmark::State& state) {
  grover::SearchConfig cfg;
  cfg.item_count = static_cast<std::size_t>(state.range(0));
  cfg.marked = {0};
  cfg.iterations = static_cast<std::size_t>(state.range(1));
  for (auto _ : state) {
    benchmark::DoNotOptimize(grover::run(cfg));
  }
  state.SetItemsProcessed(state.iterations() *
                          static_cast<int64_t>(cfg.item_count) *
                          static_cast<int64_t>(cfg.iterations));
}
BENCHMARK(BM_SearchSweeps)
    ->Args({64, 24})
    ->Args({1024, 100})
    ->Args({4096, 200})
    ->Args({16384, 400});

void BM_GateRouteSweep(benchmark::State& state) {
  grover::SearchConfig cfg;
  cfg.item_count = static_cast<std::size_t>(state.range(0));
  cfg.marked = {0};
  cfg.iterations = 1;
  const auto sweep = grover::build_iteration_operator(cfg);
  auto psi = grover::uniform_state(cfg.item_count);
  for (auto _ : state) {
    sweep(psi);
    benchmark::DoNotOptimize(psi.data());
  }
  state.SetItemsProcessed(state.iterations() *
                          static_cast<int64_t>(cfg.item_count));
}
BENCHMARK(BM_GateRouteSweep)->Arg(1024)->Arg(4096)->Arg(16384);

void BM_PhaseScan(benchmark::State& state) {
  std::vector<double> grid;
  for (int i = 0; i < 11; ++i) {
    grid.push_back(2 * std::numbers::pi * i / 10.0);
  }
  const auto jobs = static_cast<unsigned>(state.range(0));
  for (auto _ : state) {
    benchmark::DoNotOptimize(grover::phase_scan(64, 1, grid, grid, 24, jobs));
  }
}
BENCHMARK(BM_PhaseScan)->Arg(1)->Arg(2)->Arg(4);

}  // namespace

BENCHMARK_MAIN();
