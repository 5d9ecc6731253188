#include <benchmark/benchmark.h>

#include <random>

#include <flatlab/spectra.hpp>

namespace {

void BM_Fwht(benchmark::State& state) {
  const auto n = static_cast<unsigned>(state.range(0));
  std::mt19937_64 rng(7);
  std::vector<std::int32_t> base(std::size_t{1} << n);
  for (auto& v : base) v = (rng() & 1) ? 1 : -1;
  for (auto _ : state) {
    auto values = base;
    flatlab::fwht(values);
    benchmark::DoNotOptimize(values.data());
  }
  state.SetItemsProcessed(state.iterations() * static_cast<std::int64_t>(base.size()));
}
BENCHMARK(BM_Fwht)->DenseRange(8, 16, 4);

void BM_WalshTable(benchmark::State& state) {
  const auto n = static_cast<unsigned>(state.range(0));
  std::mt19937_64 rng(11);
  const auto f = flatlab::VectorialFunc::random(n, n, rng);
  for (auto _ : state) {
    flatlab::WalshTable w(f);
    benchmark::DoNotOptimize(w.at(0, 1));
  }
}
BENCHMARK(BM_WalshTable)->DenseRange(4, 10, 2);

void BM_DifferentialSpectrum(benchmark::State& state) {
  const auto n = static_cast<unsigned>(state.range(0));
  std::mt19937_64 rng(13);
  const auto f = flatlab::VectorialFunc::random(n, n, rng);
  for (auto _ : state) benchmark::DoNotOptimize(flatlab::differential_spectrum(f).delta);
}
BENCHMARK(BM_DifferentialSpectrum)->DenseRange(4, 10, 2);

}  // namespace
