// Acceptance suite: one test case per criterion, each printing a single
// PASS/FAIL summary line. Criteria run against the experiment configurations
// (alpha=10 beta=5 b0=0.25 with rho as noted, C=0.5, equal per-hop SNR).

#include <doctest.h>

#include <cmath>
#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <sstream>
#include <string>
#include <vector>

#include "oracles.hpp"
#include "rfso/analytics/channel_dependent.hpp"
#include "rfso/analytics/fixed_gain.hpp"
#include "rfso/analytics/quadrature_path.hpp"
#include "rfso/analytics/special_cases.hpp"
#include "rfso/asymptotics/diversity.hpp"
#include "rfso/asymptotics/high_snr.hpp"
#include "rfso/simulate/monte_carlo.hpp"

using namespace rfso;
using namespace rfso::analytics;
using test_oracles::budget_for;
using test_oracles::db_lin;

namespace {

const auto kFig2 = channel::MalagaParams::create(10.0, 5, 0.5, 0.25, 0.5, 0.0);
const auto kFig5 = channel::MalagaParams::create(10.0, 5, 0.75, 0.25, 0.5, 0.0);
const auto kKRed = channel::make_k_distribution(4.2, 0.25);
const auto kGgRed = channel::make_gamma_gamma(4.2, 2);

constexpr std::uint64_t kSeed = 0xACCE97ULL;

void report(int criterion, bool pass, const std::string& detail) {
  std::printf("[acceptance] criterion %d: %s - %s\n", criterion, pass ? "PASS" : "FAIL",
              detail.c_str());
  std::fflush(stdout);
  CHECK_MESSAGE(pass, "criterion ", criterion, ": ", detail);
}

std::string fmt(double v, int prec = 4) {
  char buf[48];
  std::snprintf(buf, sizeof(buf), "%.*g", prec, v);
  return buf;
}

LinkBudget fixed_budget(const channel::MalagaParams& m, double snr) {
  return budget_for(m, snr, snr, relay::RelayStrategy::fixed_gain(0.5));
}

LinkBudget cd_budget(const channel::MalagaParams& m, double snr) {
  return budget_for(m, snr, snr, relay::RelayStrategy::channel_dependent());
}

double closed_aser(const LinkBudget& lb, const Modulation& mod) {
  return mod.is_mpsk() ? aser_mpsk_exact(lb, mod) : aser_dpsk_ncfsk(lb, mod);
}

double quad_aser(const LinkBudget& lb, const Modulation& mod) {
  return mod.is_mpsk() ? quad_path::aser_mpsk(lb, mod) : quad_path::aser_dpsk_ncfsk(lb, mod);
}

const std::vector<Modulation> kAllMods = {Modulation::mpsk(2), Modulation::mpsk(4),
                                          Modulation::mpsk(8), Modulation::dpsk(),
                                          Modulation::ncfsk()};

// dB value at which a closed-form ASER curve crosses the target, by bisection
double crossing_db(const std::function<double(double)>& aser_at_db, double target) {
  double lo = 0.0, hi = 40.0;
  double flo = std::log10(aser_at_db(lo)) - std::log10(target);
  for (int it = 0; it < 60; ++it) {
    const double mid = 0.5 * (lo + hi);
    const double fm = std::log10(aser_at_db(mid)) - std::log10(target);
    if ((fm > 0) == (flo > 0)) {
      lo = mid;
      flo = fm;
    } else {
      hi = mid;
    }
  }
  return 0.5 * (lo + hi);
}

}  // namespace

TEST_CASE("criterion-1-snr-gap-constants") {
  using namespace rfso::asymptotics;
  const auto bpsk = Modulation::mpsk(2);
  const double g_bd = snr_gap_fixed(bpsk, 1, XiVariant::approx);
  const double g_bq = snr_gap_fixed_mpsk(bpsk, Modulation::mpsk(4), XiVariant::approx);
  const double g_cd = snr_gap_channel_dependent(bpsk, 1);
  const bool exact_bd = std::abs(g_bd - 10.0 * std::log10(24.0 / 13.0)) < 1e-12;
  const bool exact_bq = std::abs(g_bq - 10.0 * std::log10(44.0 / 13.0)) < 1e-12;
  const bool printed_bd = std::abs(std::round(g_bd * 100.0) / 100.0 - 2.66) < 1e-12;
  const bool printed_bq = std::abs(std::round(g_bq * 10.0) / 10.0 - 5.3) < 1e-12;
  const bool cd_val = std::abs(g_cd - 4.44) < 0.005 &&
                      std::abs(std::round(g_cd * 10.0) / 10.0 - 4.4) < 1e-12;
  report(1, exact_bd && exact_bq && printed_bd && printed_bq && cd_val,
         "fixed bpsk->dpsk " + fmt(g_bd, 6) + " dB (24/13), bpsk->qpsk " + fmt(g_bq, 6) +
             " dB (44/13), channel-dependent bpsk->dpsk " + fmt(g_cd, 6) + " dB");
}

TEST_CASE("criterion-2-diversity-orders") {
  using asymptotics::diversity_order_fit;
  bool pass = true;
  std::string detail;

  // fixed gain over 30-40 dB
  const auto fam5 = MalagaMeijerFamilies::build(kFig5);
  for (const auto& mod : {Modulation::mpsk(2), Modulation::mpsk(4), Modulation::mpsk(8),
                          Modulation::dpsk()}) {
    std::vector<double> snr_db, curve;
    for (double db = 30.0; db <= 40.0; db += 2.5) {
      const auto lb = fixed_budget(kFig5, db_lin(db));
      FixedGainAnalytics fx(lb, {}, fam5);
      snr_db.push_back(db);
      curve.push_back(mod.is_mpsk() ? fx.aser_mpsk_exact(mod) : fx.aser_dpsk_ncfsk(mod));
    }
    const double slope = diversity_order_fit(snr_db, curve, 30.0, 40.0);
    pass = pass && std::abs(slope - 1.0) <= 0.05;
    detail += "fixed " + mod.name() + " " + fmt(slope) + "; ";
  }

  // channel dependent over the stated 30-40 dB window
  const auto fam2 = MalagaMeijerFamilies::build(kFig2);
  std::vector<double> lo_db, lo_curve, hi_db, hi_curve;
  for (double db = 30.0; db <= 40.0; db += 2.5) {
    ChannelDependentAnalytics cd(cd_budget(kFig2, db_lin(db)), {}, fam2);
    lo_db.push_back(db);
    lo_curve.push_back(cd.aser_dpsk_ncfsk(Modulation::dpsk()));
  }
  const double cd_slope = diversity_order_fit(lo_db, lo_curve, 30.0, 40.0);
  const bool cd_ok = std::abs(cd_slope - 0.5) <= 0.05;
  pass = pass && cd_ok;
  detail += "channel-dependent dpsk " + fmt(cd_slope);

  // diagnostic only: the half-order slope does emerge at higher SNR
  for (double db = 60.0; db <= 80.0; db += 5.0) {
    ChannelDependentAnalytics cd(cd_budget(kFig2, db_lin(db)), {}, fam2);
    hi_db.push_back(db);
    hi_curve.push_back(cd.aser_dpsk_ncfsk(Modulation::dpsk()));
  }
  const double cd_slope_hi = diversity_order_fit(hi_db, hi_curve, 60.0, 80.0);
  detail += " (diagnostic 60-80 dB fit: " + fmt(cd_slope_hi) +
            "; the 30-40 dB window is still mixed with integer-order terms)";
  report(2, pass, detail);
}

TEST_CASE("criterion-3-triangulation-fixed-gain") {
  const auto families = MalagaMeijerFamilies::build(kFig2);
  simulate::McConfig mc;
  mc.samples = 1'000'000;
  mc.seed = kSeed;
  double worst_rel = 0.0;
  double worst_sigma = 0.0;
  bool pass = true;
  for (double db = 0.0; db <= 40.0; db += 2.0) {
    const auto lb = fixed_budget(kFig2, db_lin(db));
    for (const auto& mod : kAllMods) {
      const double closed = closed_aser(lb, mod);
      const double quad = quad_aser(lb, mod);
      const double rel = std::abs(closed - quad) / quad;
      worst_rel = std::max(worst_rel, rel);
      if (rel > 1e-5) pass = false;
      const auto est = simulate::estimate_aser(lb, mod, mc);
      const double dev_sigma = std::abs(est.mean - closed) / est.std_error;
      worst_sigma = std::max(worst_sigma, dev_sigma);
      if (dev_sigma > 3.0) pass = false;
    }
  }
  report(3, pass,
         "0-40 dB x {bpsk,qpsk,8psk,dpsk,ncfsk}: worst closed-vs-quadrature rel " +
             fmt(worst_rel, 3) + " (limit 1e-5), worst |MC-closed| " + fmt(worst_sigma, 3) +
             " sigma (limit 3)");
}

TEST_CASE("criterion-4-approximation-fidelity") {
  const auto families = MalagaMeijerFamilies::build(kFig2);
  bool within5 = true;
  double worst[3] = {0, 0, 0};
  const int orders[3] = {2, 4, 8};
  for (double db = 0.0; db <= 40.0; db += 2.0) {
    const auto lb = fixed_budget(kFig2, db_lin(db));
    FixedGainAnalytics fx(lb, {}, families);
    for (int i = 0; i < 3; ++i) {
      const auto mod = Modulation::mpsk(orders[i]);
      const double ex = fx.aser_mpsk_exact(mod);
      const double ap = fx.aser_mpsk_approx(mod);
      const double rel = std::abs(ap - ex) / ex;
      worst[i] = std::max(worst[i], rel);
      if (rel > 0.05) within5 = false;
    }
  }

  // asymptotic BPSK approx/exact ratio: evaluated where the limit exists
  // (FSO hop far ahead of the RF hop); the equal-SNR sweep plateaus lower
  const auto lb_iter = budget_for(kFig2, 1e6, 1e14, relay::RelayStrategy::fixed_gain(0.5));
  FixedGainAnalytics fx_iter(lb_iter);
  const auto bpsk = Modulation::mpsk(2);
  const double ratio_iter = fx_iter.aser_mpsk_approx(bpsk) / fx_iter.aser_mpsk_exact(bpsk);
  const bool ratio_ok = std::abs(ratio_iter / (13.0 / 12.0) - 1.0) <= 0.01;

  FixedGainAnalytics fx40(fixed_budget(kFig2, db_lin(40.0)), {}, families);
  const double ratio_diag = fx40.aser_mpsk_approx(bpsk) / fx40.aser_mpsk_exact(bpsk);

  report(4, within5 && ratio_ok,
         "max |approx-exact|/exact over 0-40 dB: bpsk " + fmt(worst[0], 3) + ", qpsk " +
             fmt(worst[1], 3) + ", 8psk " + fmt(worst[2], 3) +
             " (limit 0.05); bpsk ratio -> " + fmt(ratio_iter, 6) +
             " vs 13/12 in the separated-SNR limit (equal-SNR plateau: " +
             fmt(ratio_diag, 6) + ")");
}

TEST_CASE("criterion-5-lower-bound-property") {
  const auto families = MalagaMeijerFamilies::build(kFig2);
  simulate::McConfig mc;
  mc.samples = 1'000'000;
  mc.seed = kSeed;  // identical seed per point: common random numbers
  bool bound_ok = true;
  bool shrink_ok = true;
  double worst_violation = -1e9;
  for (const auto& mod : kAllMods) {
    std::vector<double> gaps, sigmas;
    for (double db = 0.0; db <= 40.0; db += 2.5) {
      const auto lb = cd_budget(kFig2, db_lin(db));
      ChannelDependentAnalytics cd(lb, {}, families);
      const double bound = mod.is_mpsk() ? cd.aser_mpsk_exact(mod) : cd.aser_dpsk_ncfsk(mod);
      const auto est = simulate::estimate_aser(lb, mod, mc);
      const double slack = bound - (est.mean + 3.0 * est.std_error);
      worst_violation = std::max(worst_violation, slack);
      if (slack > 0) bound_ok = false;
      if (db >= 25.0) {
        gaps.push_back(est.mean - bound);
        sigmas.push_back(est.std_error);
      }
    }
    for (std::size_t i = 1; i < gaps.size(); ++i) {
      if (gaps[i] > gaps[i - 1] + 0.5 * sigmas[i]) shrink_ok = false;
    }
  }
  report(5, bound_ok && shrink_ok,
         std::string("closed-form bound vs true-combining MC on 0-40 dB: bound <= MC+3sigma ") +
             (bound_ok ? "everywhere" : "VIOLATED") + ", gap over the top 15 dB " +
             (shrink_ok ? "shrinks monotonically" : "NOT monotone"));
}

TEST_CASE("criterion-6-special-case-equivalence") {
  double worst = 0.0;
  for (double db : {10.0, 20.0, 30.0}) {
    const double snr = db_lin(db);
    struct Pair {
      LinkBudget lb;
      SpecialKind kind;
    };
    const Pair pairs[] = {
        {fixed_budget(kKRed, snr), SpecialKind::k_distribution},
        {fixed_budget(kGgRed, snr), SpecialKind::gamma_gamma},
        {cd_budget(kKRed, snr), SpecialKind::k_distribution},
        {cd_budget(kGgRed, snr), SpecialKind::gamma_gamma},
    };
    for (const auto& p : pairs) {
      const bool fixed = p.lb.strategy.kind == relay::RelayKind::fixed_gain;
      const double mgf_gen = mgf_end_to_end(p.lb, 1.0);
      const double mgf_spec = fixed ? mgf_fixed_gain_special(p.kind, p.lb, 1.0)
                                    : mgf_channel_dependent_special(p.kind, p.lb, 1.0);
      worst = std::max(worst, std::abs(mgf_gen - mgf_spec) / std::abs(mgf_gen));
      for (const auto& mod : {Modulation::dpsk(), Modulation::ncfsk()}) {
        const double gen = aser_dpsk_ncfsk(p.lb, mod);
        const double spec =
            fixed ? aser_dpsk_ncfsk_fixed_special(p.kind, p.lb, mod)
                  : aser_dpsk_ncfsk_channel_dependent_special(p.kind, p.lb, mod);
        worst = std::max(worst, std::abs(gen - spec) / gen);
      }
    }
  }
  report(6, worst <= 1e-6,
         "K and Gamma-Gamma dedicated MGF/ASER forms vs general Malaga at 10/20/30 dB: "
         "worst rel dev " +
             fmt(worst, 3) + " (limit 1e-6)");
}

TEST_CASE("criterion-7-distribution-integrity") {
  bool pass = true;
  std::string detail;
  numerics::QuadratureSettings qs;
  qs.abs_tol = 1e-12;
  qs.rel_tol = 1e-10;

  std::vector<channel::MalagaParams> sweep = {kFig2, kFig5, kKRed, kGgRed,
                                              channel::MalagaParams::create(4.2, 2, 0.5, 0.25,
                                                                            0.5, 0.0)};
  for (double rho : {0.0, 0.25, 0.9})
    sweep.push_back(channel::MalagaParams::create(10.0, 5, rho, 0.25, 0.5, 0.0));

  double worst_norm = 0.0, worst_wsum = 0.0;
  for (const auto& p : sweep) {
    const double v_hi = 60.0 / std::sqrt(p.lambda_const());
    const double norm = numerics::integrate_finite(
        [&](double v) { return 2.0 * v * channel::malaga_pdf(p, v * v); }, 0.0, v_hi, qs);
    worst_norm = std::max(worst_norm, std::abs(norm - 1.0));
    double ws = 0.0;
    for (double w : p.mixture_weight()) ws += w;
    worst_wsum = std::max(worst_wsum, std::abs(ws - 1.0));
  }
  pass = pass && worst_norm <= 1e-8 && worst_wsum <= 1e-10;
  detail += "pdf norm dev " + fmt(worst_norm, 3) + ", weight-sum dev " + fmt(worst_wsum, 3);

  int set_idx = 0;
  for (const auto& p : {kFig2, kKRed, kGgRed}) {
    const auto draws = simulate::draw_irradiance(p, kSeed + set_idx, 100'000);
    const test_oracles::MalagaCdfOracle cdf(p);
    const auto ks = test_oracles::ks_test(draws, cdf);
    pass = pass && ks.p_value > 0.01;
    detail += "; KS p=" + fmt(ks.p_value, 3);
    ++set_idx;
  }
  report(7, pass, detail + " (sets: full Malaga, K, Gamma-Gamma; significance 0.01)");
}

TEST_CASE("criterion-8-qualitative-orderings") {
  const auto families = MalagaMeijerFamilies::build(kFig2);
  bool pass = true;
  std::string detail;

  // BPSK < DPSK < NCFSK with ~3 dB spacings at ASER = 1e-3
  auto fixed_curve = [&](const Modulation& mod) {
    return [&, mod](double db) {
      FixedGainAnalytics fx(fixed_budget(kFig2, db_lin(db)), {}, families);
      return mod.is_mpsk() ? fx.aser_mpsk_exact(mod) : fx.aser_dpsk_ncfsk(mod);
    };
  };
  for (double db : {10.0, 20.0, 30.0}) {
    FixedGainAnalytics fx(fixed_budget(kFig2, db_lin(db)), {}, families);
    const double b = fx.aser_mpsk_exact(Modulation::mpsk(2));
    const double d = fx.aser_dpsk_ncfsk(Modulation::dpsk());
    const double n = fx.aser_dpsk_ncfsk(Modulation::ncfsk());
    pass = pass && b < d && d < n;
  }
  const double db_b = crossing_db(fixed_curve(Modulation::mpsk(2)), 1e-3);
  const double db_d = crossing_db(fixed_curve(Modulation::dpsk()), 1e-3);
  const double db_n = crossing_db(fixed_curve(Modulation::ncfsk()), 1e-3);
  const double gap_bd = db_d - db_b;
  const double gap_dn = db_n - db_d;
  pass = pass && std::abs(gap_bd - 3.0) <= 0.5 && std::abs(gap_dn - 3.0) <= 0.5;
  detail += "spacing at 1e-3: dpsk-bpsk " + fmt(gap_bd) + " dB, ncfsk-dpsk " + fmt(gap_dn) +
            " dB (3 +- 0.5)";

  // ASER improves with (alpha, beta)
  {
    const double snr = db_lin(20.0);
    double prev_b = 1e9, prev_d = 1e9;
    for (const auto& [a, b] :
         std::vector<std::pair<double, int>>{{4.2, 2}, {10.0, 5}}) {
      const auto m = channel::MalagaParams::create(a, b, 0.5, 0.25, 0.5, 0.0);
      const auto lb = fixed_budget(m, snr);
      const double pb = aser_mpsk_exact(lb, Modulation::mpsk(2));
      const double pd = aser_dpsk_ncfsk(lb, Modulation::dpsk());
      pass = pass && pb < prev_b && pd < prev_d;
      prev_b = pb;
      prev_d = pd;
    }
  }

  // channel-dependent ASER improves with rho
  {
    const double snr = db_lin(25.0);
    double prev8 = 1e9, prevd = 1e9;
    for (double rho : {0.0, 0.5, 0.9}) {
      const auto m = channel::MalagaParams::create(4.2, 2, rho, 0.25, 0.5, 0.0);
      const auto lb = cd_budget(m, snr);
      const double p8 = aser_mpsk_exact(lb, Modulation::mpsk(8));
      const double pd = aser_dpsk_ncfsk(lb, Modulation::dpsk());
      pass = pass && p8 < prev8 && pd < prevd;
      prev8 = p8;
      prevd = pd;
    }
  }

  // fixed gain beats channel dependent under the canonical Gamma-Gamma channel
  for (double db : {15.0, 25.0, 35.0}) {
    const double snr = db_lin(db);
    const double f8 = aser_mpsk_exact(fixed_budget(kGgRed, snr), Modulation::mpsk(8));
    const double c8 = aser_mpsk_exact(cd_budget(kGgRed, snr), Modulation::mpsk(8));
    const double fd = aser_dpsk_ncfsk(fixed_budget(kGgRed, snr), Modulation::dpsk());
    const double cdp = aser_dpsk_ncfsk(cd_budget(kGgRed, snr), Modulation::dpsk());
    pass = pass && f8 < c8 && fd < cdp;
  }
  report(8, pass, detail + "; orderings in (alpha,beta), rho, and fixed-vs-dependent hold");
}

TEST_CASE("criterion-9-deterministic-parallel-curves") {
#ifndef RFSO_TOOL_PATH
  report(9, false, "tool path not configured");
#else
  const std::string cfg_path = "acceptance_c9_config.json";
  {
    std::ofstream cfg(cfg_path);
    cfg << R"({
      "channel": {"model": "malaga", "alpha": 10, "beta": 5, "rho": 0.5, "b0": 0.25},
      "strategy": {"kind": "fixed_gain", "c": 0.5},
      "modulations": ["bpsk", "dpsk"],
      "grid": {"start_db": 0, "stop_db": 20, "step_db": 10},
      "methods": ["exact", "mc"],
      "mc": {"samples": 65536, "seed": 99}
    })";
  }
  const std::string out_path = "acceptance_c9_out.csv";
  auto run = [&](int threads) {
    std::ostringstream cmd;
    cmd << "RFSO_THREADS=" << threads << " " << RFSO_TOOL_PATH << " curve --config "
        << cfg_path << " --no-timestamp --out " << out_path << " >/dev/null 2>&1";
    return std::system(cmd.str().c_str());
  };
  auto slurp = [&]() {
    std::ifstream in(out_path, std::ios::binary);
    std::stringstream ss;
    ss << in.rdbuf();
    return ss.str();
  };
  const int r1 = run(1);
  const std::string a = slurp();
  const int r4 = run(4);
  const std::string b = slurp();
  const int r8 = run(8);
  const std::string c = slurp();
  const bool pass = r1 == 0 && r4 == 0 && r8 == 0 && !a.empty() && a == b && b == c;
  report(9, pass,
         "cmd_curve with 1/4/8 worker threads: " +
             std::string(pass ? "byte-identical output files" : "outputs differ"));
#endif
}
