#include <random>
#include <vector>

#include <benchmark/benchmark.h>

#include "armm/design.hpp"
#include "armm/smoother.hpp"
#include "armm/spectral.hpp"

namespace {

armm::Signal noise(std::size_t n) {
  std::mt19937_64 rng(42);
  std::normal_distribution<double> dist;
  std::vector<double> y(n);
  for (auto& v : y) v = dist(rng);
  return armm::make_signal(std::move(y));
}

void BM_ArSmooth(benchmark::State& state) {
  const auto n = static_cast<std::size_t>(state.range(0));
  const auto y = noise(n);
  const auto theta = armm::Theta::uniform(3, 1.0 / 3.0, n);
  for (auto _ : state) benchmark::DoNotOptimize(armm::ar_smooth(y, theta));
  state.SetComplexityN(state.range(0));
}
BENCHMARK(BM_ArSmooth)->RangeMultiplier(4)->Range(1 << 10, 1 << 20)->Complexity(benchmark::oNLogN);

void BM_EffectiveWindow(benchmark::State& state) {
  const auto n = static_cast<std::size_t>(state.range(0));
  const auto kernel = armm::build_ar_kernel_theta(armm::Theta::uniform(4, 1.0 / 3.0, n));
  for (auto _ : state) benchmark::DoNotOptimize(armm::effective_window(kernel, n));
}
BENCHMARK(BM_EffectiveWindow)->RangeMultiplier(4)->Range(1 << 8, 1 << 16);

void BM_DesignJoint(benchmark::State& state) {
  const auto y = noise(4096);
  armm::DesignConfig cfg;
  cfg.max_half_width = static_cast<std::size_t>(state.range(0));
  cfg.mode = armm::DesignMode::Joint;
  for (auto _ : state) benchmark::DoNotOptimize(armm::design_search(y, cfg));
}
BENCHMARK(BM_DesignJoint)->DenseRange(2, 8, 3)->Unit(benchmark::kMillisecond);

}  // namespace

BENCHMARK_MAIN();
