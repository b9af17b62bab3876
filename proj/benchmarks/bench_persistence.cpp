#include <benchmark/benchmark.h>

#include <random>

#include "topopush/persistence.hpp"

using namespace topopush;

namespace {

std::vector<Point2> cloud(std::size_t n) {
  std::mt19937_64 rng(n);
  std::uniform_real_distribution<double> u(0.0, 1.0);
  std::vector<Point2> pts(n);
  for (auto& p : pts) p = {u(rng), u(rng)};
  return pts;
}

void BM_ZeroDimPersistence(benchmark::State& state) {
  const auto pts = cloud(static_cast<std::size_t>(state.range(0)));
  for (auto _ : state) benchmark::DoNotOptimize(zero_dim_persistence(pts));
  state.SetComplexityN(state.range(0));
}
BENCHMARK(BM_ZeroDimPersistence)->RangeMultiplier(2)->Range(8, 512)->Complexity();

void BM_ComponentsAt(benchmark::State& state) {
  const auto pts = cloud(static_cast<std::size_t>(state.range(0)));
  for (auto _ : state) benchmark::DoNotOptimize(components_at(pts, 0.1));
}
BENCHMARK(BM_ComponentsAt)->RangeMultiplier(2)->Range(8, 512);

void BM_PersistentRadii(benchmark::State& state) {
  const auto diagram = zero_dim_persistence(cloud(static_cast<std::size_t>(state.range(0))));
  for (auto _ : state) benchmark::DoNotOptimize(persistent_radii(diagram, 0.015, 0.08));
}
BENCHMARK(BM_PersistentRadii)->Arg(16)->Arg(256);

}  // namespace

BENCHMARK_MAIN();
