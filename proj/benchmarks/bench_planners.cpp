#include <benchmark/benchmark.h>

#include "topopush/planners.hpp"
#include "topopush/scenario.hpp"

using namespace topopush;

namespace {

template <Algorithm A>
void BM_Planner(benchmark::State& state) {
  const auto scene = generate_random_deep(static_cast<std::uint64_t>(state.range(0)),
                                          static_cast<int>(state.range(1)));
  for (auto _ : state) benchmark::DoNotOptimize(run_planner(A, scene.config));
}

void planner_args(benchmark::internal::Benchmark* b) {
  for (int n : {6, 10, 14}) b->Args({7, n});
}

BENCHMARK(BM_Planner<Algorithm::Phia>)->Name("phia")->Apply(planner_args);
BENCHMARK(BM_Planner<Algorithm::Phis>)->Name("phis")->Apply(planner_args);
BENCHMARK(BM_Planner<Algorithm::Ooa>)->Name("ooa")->Apply(planner_args);

void BM_GenerateRandomDeep(benchmark::State& state) {
  std::uint64_t seed = 0;
  for (auto _ : state) benchmark::DoNotOptimize(generate_random_deep(seed++));
}
BENCHMARK(BM_GenerateRandomDeep);

}  // namespace

BENCHMARK_MAIN();
