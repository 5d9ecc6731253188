#include <benchmark/benchmark.h>

#include <random>

#include <flatlab/codes.hpp>
#include <flatlab/flats.hpp>

namespace {

void BM_EnumerateFlats(benchmark::State& state) {
  const auto n = static_cast<unsigned>(state.range(0));
  std::mt19937_64 rng(17);
  const auto f = flatlab::VectorialFunc::random(n, n, rng);
  for (auto _ : state) benchmark::DoNotOptimize(flatlab::enumerate_flats(f).total_blocks());
}
BENCHMARK(BM_EnumerateFlats)->DenseRange(4, 8, 2)->Unit(benchmark::kMillisecond);

void BM_VanishingFlats(benchmark::State& state) {
  const auto n = static_cast<unsigned>(state.range(0));
  std::mt19937_64 rng(19);
  const auto f = flatlab::VectorialFunc::random(n, n, rng);
  for (auto _ : state) benchmark::DoNotOptimize(flatlab::vanishing_flats(f).block_count());
}
BENCHMARK(BM_VanishingFlats)->DenseRange(6, 12, 2)->Unit(benchmark::kMillisecond);

void BM_DualWeightSix(benchmark::State& state) {
  const auto n = static_cast<unsigned>(state.range(0));
  std::mt19937_64 rng(23);
  const auto f = flatlab::VectorialFunc::random(n, n, rng);
  for (auto _ : state) benchmark::DoNotOptimize(flatlab::dual_weight_six(f).block_count());
}
BENCHMARK(BM_DualWeightSix)->DenseRange(4, 6, 1)->Unit(benchmark::kMillisecond);

}  // namespace
