#include <doctest.h>

#include <cmath>
#include <cstdlib>

#include "oracles.hpp"
#include "rfso/analytics/fixed_gain.hpp"
#include "rfso/errors.hpp"
#include "rfso/numerics/quadrature.hpp"
#include "rfso/simulate/monte_carlo.hpp"
#include "rfso/simulate/sep.hpp"

using namespace rfso;
using namespace rfso::simulate;
using test_oracles::db_lin;
using test_oracles::erfc_oracle;
using test_oracles::fig2_budget;

TEST_CASE("conditional SEP closed values") {
  CHECK(conditional_sep(Modulation::dpsk(), 0.0) == 0.5);
  CHECK(conditional_sep(Modulation::ncfsk(), 2.0) ==
        doctest::Approx(0.5 * std::exp(-1.0)).epsilon(1e-14));
  CHECK(conditional_sep(Modulation::mpsk(8), 0.0) == doctest::Approx(7.0 / 8.0).epsilon(1e-12));
  CHECK_THROWS_AS(conditional_sep(Modulation::dpsk(), -1.0), DomainError);
}

TEST_CASE("BPSK conditional SEP equals Q(sqrt(2 gamma)) via an independent erfc") {
  for (double g : {0.01, 0.5, 1.0, 4.0, 9.0}) {
    const double expected = 0.5 * erfc_oracle(std::sqrt(g));
    CHECK(conditional_sep(Modulation::mpsk(2), g) == doctest::Approx(expected).epsilon(1e-9));
  }
  // the spec'd anchor point: gamma = 4 vs Q(sqrt 8)
  CHECK(conditional_sep(Modulation::mpsk(2), 4.0) ==
        doctest::Approx(0.5 * erfc_oracle(2.0)).epsilon(1e-9));
}

TEST_CASE("MPSK conditional SEP matches the adaptive angular integral") {
  numerics::QuadratureSettings s;
  s.abs_tol = 1e-14;
  s.rel_tol = 1e-12;
  for (int M : {4, 8, 16}) {
    const auto mod = Modulation::mpsk(M);
    const double n2 = mod.n() * mod.n();
    for (double g : {0.05, 0.7, 3.0, 12.0, 40.0}) {
      const double oracle = numerics::integrate_finite(
                                [&](double th) {
                                  const double st = std::sin(th);
                                  return std::exp(-g * n2 / (st * st));
                                },
                                0.0, mod.theta(), s) /
                            M_PI;
      CHECK(conditional_sep(mod, g) == doctest::Approx(oracle).epsilon(1e-9));
      // the trimmed Monte Carlo tier stays within its documented budget
      SepEvaluator fast(mod, SepEvaluator::Tier::fast);
      CHECK(std::abs(fast(g) - oracle) <= 1e-6);
    }
  }
}

TEST_CASE("estimate_aser: zero-SNR limit and CI sanity") {
  McConfig cfg;
  cfg.samples = 50'000;
  const auto lb = fig2_budget(1e-9);
  const auto est = estimate_aser(lb, Modulation::dpsk(), cfg);
  CHECK(est.mean == doctest::Approx(0.5).epsilon(1e-3));
  CHECK(est.ci_low <= est.mean);
  CHECK(est.mean <= est.ci_high);
  CHECK(est.samples_used == cfg.samples);
  CHECK_THROWS_AS([&] {
    McConfig bad;
    bad.samples = 10;
    bad.chunk_size = 100;
    bad.validate();
  }(), ConfigError);
}

TEST_CASE("estimate_aser is bit-identical across chunk sizes and worker counts") {
  const auto lb = fig2_budget(db_lin(15.0));
  McConfig a;
  a.samples = 100'000;
  a.seed = 12345;
  a.chunk_size = 1'000;
  McConfig b = a;
  b.chunk_size = 100'000;
  const auto ea = estimate_aser(lb, Modulation::mpsk(4), a);
  const auto eb = estimate_aser(lb, Modulation::mpsk(4), b);
  CHECK(ea.mean == eb.mean);
  CHECK(ea.std_error == eb.std_error);

  setenv("RFSO_THREADS", "1", 1);
  const auto e1 = estimate_aser(lb, Modulation::mpsk(4), a);
  setenv("RFSO_THREADS", "4", 1);
  const auto e4 = estimate_aser(lb, Modulation::mpsk(4), a);
  unsetenv("RFSO_THREADS");
  CHECK(e1.mean == e4.mean);
  CHECK(e1.std_error == e4.std_error);
  CHECK(e1.mean == ea.mean);
}

TEST_CASE("MC brackets the closed form at the reference point") {
  const auto lb = fig2_budget(db_lin(20.0));
  McConfig cfg;
  cfg.samples = 1'000'000;
  cfg.seed = 777;
  const auto est = estimate_aser(lb, Modulation::mpsk(2), cfg);
  const double closed = analytics::aser_mpsk_exact(lb, Modulation::mpsk(2));
  CHECK(std::abs(est.mean - closed) <= 3.0 * est.std_error);
  CHECK(est.ci_low <= closed);
  CHECK(closed <= est.ci_high);
}

TEST_CASE("standard error scales as the inverse square root of the sample count") {
  const auto lb = fig2_budget(db_lin(15.0));
  McConfig cfg;
  cfg.seed = 4242;
  double ref = 0.0;
  int decade = 0;
  for (std::size_t n : {std::size_t{1000}, std::size_t{10'000}, std::size_t{100'000},
                        std::size_t{1'000'000}}) {
    cfg.samples = n;
    cfg.chunk_size = std::min<std::size_t>(n, 4096);
    const auto est = estimate_aser(lb, Modulation::dpsk(), cfg);
    const double scaled = est.std_error * std::sqrt(static_cast<double>(n));
    if (decade++ == 0) {
      ref = scaled;
    } else {
      CHECK(scaled / ref > 0.9);
      CHECK(scaled / ref < 1.1);
    }
  }
}

TEST_CASE("semi-analytic averaging beats symbol-level detection on variance") {
  const auto lb = fig2_budget(db_lin(15.0));
  McConfig cfg;
  cfg.samples = 200'000;
  cfg.seed = 99;
  const auto semi = estimate_aser(lb, Modulation::mpsk(2), cfg);
  const auto symbol = estimate_aser_symbol_level(lb, Modulation::mpsk(2), cfg);
  CHECK(semi.std_error < symbol.std_error);
  // and the two estimators agree within their joint uncertainty
  const double joint = std::hypot(semi.std_error, symbol.std_error);
  CHECK(std::abs(semi.mean - symbol.mean) <= 4.0 * joint);
  // QPSK detector path too
  const auto symbol4 = estimate_aser_symbol_level(lb, Modulation::mpsk(4), cfg);
  const auto semi4 = estimate_aser(lb, Modulation::mpsk(4), cfg);
  CHECK(std::abs(semi4.mean - symbol4.mean) <=
        4.0 * std::hypot(semi4.std_error, symbol4.std_error));
  CHECK_THROWS_AS(estimate_aser_symbol_level(lb, Modulation::mpsk(8), cfg), ConfigError);
}

TEST_CASE("CI at one million samples separates the BPSK and DPSK curves at 20 dB") {
  const auto lb = fig2_budget(db_lin(20.0));
  McConfig cfg;
  cfg.samples = 1'000'000;
  cfg.seed = 2020;
  const auto b = estimate_aser(lb, Modulation::mpsk(2), cfg);
  const auto d = estimate_aser(lb, Modulation::dpsk(), cfg);
  CHECK(b.ci_high < d.ci_low);
}

TEST_CASE("estimate_cdf_point brackets the closed forms") {
  McConfig cfg;
  cfg.samples = 400'000;
  cfg.seed = 31415;
  const auto lb = fig2_budget(db_lin(10.0));
  const double g = 0.5 * db_lin(10.0);
  const auto est = estimate_cdf_point(lb, g, cfg);
  const double closed = analytics::cdf_end_to_end(lb, g);
  CHECK(std::abs(est.mean - closed) <= 3.0 * est.std_error + 1e-9);
  const auto big = estimate_cdf_point(lb, 1e9, cfg);
  CHECK(big.mean == 1.0);

  // channel dependent: the empirical CDF of the true combined SNR lies at or
  // above the min-bound CDF (the bound stochastically dominates)
  const auto lbc = test_oracles::budget_for(
      channel::MalagaParams::create(10.0, 5, 0.5, 0.25, 0.5, 0.0), db_lin(10.0),
      db_lin(10.0), relay::RelayStrategy::channel_dependent());
  const auto estc = estimate_cdf_point(lbc, 2.0, cfg);
  const double bound_cdf = analytics::cdf_end_to_end(lbc, 2.0);
  CHECK(estc.mean >= bound_cdf - 3.0 * estc.std_error);
}

TEST_CASE("normal quantile matches the erfc oracle") {
  // Phi^{-1}(p) vs inverting the oracle's complementary error function
  for (double p : {0.6, 0.9, 0.975, 0.9985}) {
    const double z = normal_quantile(p);
    const double tail = 0.5 * erfc_oracle(z / std::sqrt(2.0));
    CHECK(1.0 - tail == doctest::Approx(p).epsilon(1e-8));
  }
  CHECK_THROWS_AS(normal_quantile(0.0), DomainError);
}

TEST_CASE("deterministic draw helpers repeat exactly") {
  const auto p = channel::MalagaParams::create(10.0, 5, 0.5, 0.25, 0.5, 0.0);
  const auto a = draw_irradiance(p, 5, 10);
  const auto b = draw_irradiance(p, 5, 10);
  CHECK(a == b);
  for (double v : a) CHECK(v > 0.0);
  const auto lb = fig2_budget(db_lin(20.0));
  const auto s1 = draw_end_to_end_snr(lb, 6, 8);
  const auto s2 = draw_end_to_end_snr(lb, 6, 8);
  CHECK(s1 == s2);
}
