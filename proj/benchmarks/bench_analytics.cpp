#include <benchmark/benchmark.h>

#include "rfso/analytics/fixed_gain.hpp"
#include "rfso/simulate/monte_carlo.hpp"
#include "rfso/simulate/sep.hpp"

namespace {

rfso::analytics::LinkBudget make_lb(double snr) {
  return rfso::analytics::LinkBudget{
      rfso::channel::RayleighParams::create(snr),
      rfso::channel::FsoSnrParams::create(
          rfso::channel::MalagaParams::create(10.0, 5, 0.5, 0.25, 0.5, 0.0), snr),
      rfso::relay::RelayStrategy::fixed_gain(0.5)};
}

void BM_FixedGainMgf(benchmark::State& state) {
  rfso::analytics::FixedGainAnalytics fx(make_lb(316.0));
  double s = 0.1;
  for (auto _ : state) {
    benchmark::DoNotOptimize(fx.mgf(s));
    s = s < 50.0 ? s * 1.4 : 0.1;
  }
}
BENCHMARK(BM_FixedGainMgf);

void BM_AserMpskExact(benchmark::State& state) {
  rfso::analytics::FixedGainAnalytics fx(make_lb(316.0));
  const auto qpsk = rfso::analytics::Modulation::mpsk(4);
  for (auto _ : state) benchmark::DoNotOptimize(fx.aser_mpsk_exact(qpsk));
}
BENCHMARK(BM_AserMpskExact);

void BM_SepEvaluator8psk(benchmark::State& state) {
  rfso::simulate::SepEvaluator sep(rfso::analytics::Modulation::mpsk(8),
                                   rfso::simulate::SepEvaluator::Tier::fast);
  double g = 0.01;
  for (auto _ : state) {
    benchmark::DoNotOptimize(sep(g));
    g = g < 300.0 ? g * 1.1 : 0.01;
  }
}
BENCHMARK(BM_SepEvaluator8psk);

void BM_McBlock(benchmark::State& state) {
  const auto lb = make_lb(100.0);
  const auto dpsk = rfso::analytics::Modulation::dpsk();
  rfso::simulate::McConfig cfg;
  cfg.samples = 4096;
  cfg.chunk_size = 4096;
  for (auto _ : state)
    benchmark::DoNotOptimize(rfso::simulate::estimate_aser(lb, dpsk, cfg));
}
BENCHMARK(BM_McBlock);

}  // namespace
