#include <benchmark/benchmark.h>

#include <random>

#include "rfso/channel/malaga.hpp"

namespace {

const auto kParams = rfso::channel::MalagaParams::create(10.0, 5, 0.5, 0.25, 0.5, 0.0);

void BM_MalagaPdf(benchmark::State& state) {
  double i = 0.01;
  for (auto _ : state) {
    benchmark::DoNotOptimize(rfso::channel::malaga_pdf(kParams, i));
    i = i < 10.0 ? i * 1.3 : 0.01;
  }
}
BENCHMARK(BM_MalagaPdf);

void BM_MalagaSample(benchmark::State& state) {
  std::mt19937_64 rng(42);
  for (auto _ : state) benchmark::DoNotOptimize(rfso::channel::sample_malaga_one(kParams, rng));
}
BENCHMARK(BM_MalagaSample);

}  // namespace
