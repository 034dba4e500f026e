#include <benchmark/benchmark.h>

#include "rfso/numerics/bessel.hpp"
#include "rfso/numerics/gamma.hpp"
#include "rfso/numerics/meijer.hpp"
#include "rfso/numerics/quadrature.hpp"

namespace {

void BM_BesselK(benchmark::State& state) {
  double x = 0.1;
  for (auto _ : state) {
    benchmark::DoNotOptimize(rfso::numerics::bessel_k(5.0, x));
    x = x < 40.0 ? x + 0.37 : 0.1;
  }
}
BENCHMARK(BM_BesselK);

void BM_ComplexLogGamma(benchmark::State& state) {
  std::complex<double> z(5.5, 0.0);
  for (auto _ : state) {
    benchmark::DoNotOptimize(rfso::numerics::log_gamma(z));
    z += std::complex<double>(0.0, 0.05);
    if (z.imag() > 20.0) z = std::complex<double>(5.5, 0.0);
  }
}
BENCHMARK(BM_ComplexLogGamma);

void BM_MeijerOneShot(benchmark::State& state) {
  rfso::numerics::MeijerGSpec spec;
  spec.m = 5;
  spec.n = 1;
  spec.a = {0.0};
  spec.b = {5.0, 5.5, 0.5, 1.0, 0.0};
  spec.z = 0.01;
  for (auto _ : state) benchmark::DoNotOptimize(rfso::numerics::meijer_g(spec));
}
BENCHMARK(BM_MeijerOneShot);

void BM_MeijerFamilyEval(benchmark::State& state) {
  rfso::numerics::MeijerGContour contour(5, 1, {0.0}, {5.0, 5.5, 0.5, 1.0, 0.0});
  double z = 1e-6;
  for (auto _ : state) {
    benchmark::DoNotOptimize(contour(z));
    z = z < 10.0 ? z * 1.7 : 1e-6;
  }
}
BENCHMARK(BM_MeijerFamilyEval);

void BM_AdaptiveQuadrature(benchmark::State& state) {
  for (auto _ : state) {
    auto v = rfso::numerics::integrate_semi_infinite([](double x) { return std::exp(-x); }, 0.0);
    benchmark::DoNotOptimize(v);
  }
}
BENCHMARK(BM_AdaptiveQuadrature);

}  // namespace
