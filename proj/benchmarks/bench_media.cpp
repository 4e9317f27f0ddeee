#include <benchmark/benchmark.h>

#include "ctcog/judgement.hpp"
#include "ctcog/media_analysis.hpp"
#include "ctcog/standard_media.hpp"

namespace {

using namespace ctcog;

void BM_CountingTask(benchmark::State& state) {
  const auto q = make_affect_qubit();
  const auto s = theta_state(q.medium, 1.234);
  const auto n = static_cast<std::uint64_t>(state.range(0));
  std::uint64_t seed = 0;
  for (auto _ : state) {
    benchmark::DoNotOptimize(counting_task(q.medium, s, q.x, n, seed++));
  }
  state.SetItemsProcessed(state.iterations() * static_cast<int64_t>(n));
}
BENCHMARK(BM_CountingTask)->Arg(1000)->Arg(100000)->Arg(1000000);

void BM_ExactPartition(benchmark::State& state) {
  const auto q = make_affect_qubit();
  const auto s = theta_state(q.medium, 0.77, 0.3);
  for (auto _ : state) {
    benchmark::DoNotOptimize(q.medium.exact_partition(s, q.a));
  }
}
BENCHMARK(BM_ExactPartition);

void BM_OutcomeSampler(benchmark::State& state) {
  const auto q = make_affect_qubit();
  const auto s = theta_state(q.medium, 1.234);
  const auto sampler = q.medium.make_outcome_sampler(s, q.x);
  CounterRng rng(7);
  std::size_t acc = 0;
  for (auto _ : state) {
    acc += sampler(rng);
  }
  benchmark::DoNotOptimize(acc);
}
BENCHMARK(BM_OutcomeSampler);

void BM_ConjunctionCheck(benchmark::State& state) {
  const auto q = make_affect_qubit();
  const std::vector<MediumState> states{q.medium.prepare(q.x1)};
  for (auto _ : state) {
    benchmark::DoNotOptimize(
        conjunction_check(q.medium, q.x, q.a, states));
  }
}
BENCHMARK(BM_ConjunctionCheck);

}  // namespace
