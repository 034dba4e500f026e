#include "rfso/analytics/quadrature_path.hpp"

#include <cmath>

#include "aser_detail.hpp"
#include "rfso/errors.hpp"

namespace rfso::analytics::quad_path {

namespace {

// E[exp(-p*gamma1) | gamma1 <= g] * P(...) + tail, for the min-combined hop:
// integral_0^g e^{-p t} f1(t) dt + e^{-p g} (1 - F1(g)), f1 exponential(mean g1).
double min_inner(double p, double g1, double g2) {
  const double q = p + 1.0 / g1;
  const double e = std::exp(-std::min(q * g2, 700.0));
  return (1.0 - e) / (g1 * q) + e;
}

}  // namespace

double expect_over_fso(const channel::FsoSnrParams& fso,
                       const std::function<double(double)>& g,
                       const numerics::QuadratureSettings& settings) {
  // gamma2 = gamma_bar * v^4; the integrand tail decays like exp(-2 sqrt(L) v)
  const double v_hi = 90.0 / std::sqrt(fso.malaga.lambda_const());
  auto f = [&](double v) {
    const double g2 = fso.gamma_bar * v * v * v * v;
    if (g2 <= 0.0) return 0.0;
    const double jac = 4.0 * fso.gamma_bar * v * v * v;
    return channel::fso_snr_pdf(fso, g2) * g(g2) * jac;
  };
  return numerics::integrate_finite(f, 0.0, v_hi, settings);
}

double rayleigh_mpsk_aser(double gamma_bar, const Modulation& mod) {
  const int M = mod.order();
  const double s1 = mod.n() * mod.n();
  const double a = gamma_bar * s1;
  const double r = std::sqrt(a / (1.0 + a));
  return (M - 1.0) / M - r / M_PI * (M_PI / 2.0 + std::atan(r / std::tan(M_PI / M)));
}

double mgf(const LinkBudget& lb, double s, const numerics::QuadratureSettings& settings) {
  if (s < 0) throw DomainError("mgf: s must be nonnegative");
  if (s == 0) return 1.0;
  const double g1 = lb.rf.gamma_bar;
  if (lb.strategy.kind == relay::RelayKind::fixed_gain) {
    const double c = lb.strategy.c;
    // conditioned on gamma2 the end-to-end SNR is exponential with mean
    // g1 * gamma2/(gamma2 + C)
    return expect_over_fso(
        lb.fso, [&](double g2) { return 1.0 / (1.0 + s * g1 * g2 / (g2 + c)); }, settings);
  }
  return expect_over_fso(lb.fso, [&](double g2) { return min_inner(s, g1, g2); }, settings);
}

double cdf(const LinkBudget& lb, double gamma, const numerics::QuadratureSettings& settings) {
  if (gamma < 0) throw DomainError("cdf: gamma must be nonnegative");
  if (gamma == 0) return 0.0;
  const double g1 = lb.rf.gamma_bar;
  if (lb.strategy.kind == relay::RelayKind::fixed_gain) {
    const double c = lb.strategy.c;
    const double survival = expect_over_fso(
        lb.fso,
        [&](double g2) { return std::exp(-std::min(gamma * (g2 + c) / (g2 * g1), 700.0)); },
        settings);
    return 1.0 - survival;
  }
  const double f1 = -std::expm1(-gamma / g1);
  const double f2 = channel::fso_snr_cdf(lb.fso, gamma, channel::CdfMethod::quadrature,
                                         settings);
  return f1 + f2 - f1 * f2;
}

double aser_mpsk(const LinkBudget& lb, const Modulation& mod,
                 const numerics::QuadratureSettings& settings) {
  const double g1 = lb.rf.gamma_bar;
  if (lb.strategy.kind == relay::RelayKind::fixed_gain) {
    const double c = lb.strategy.c;
    return expect_over_fso(
        lb.fso, [&](double g2) { return rayleigh_mpsk_aser(g1 * g2 / (g2 + c), mod); },
        settings);
  }
  // min bound: theta integral of the min-combined conditional MGF
  const double n2 = mod.n() * mod.n();
  auto sep_given_g2 = [&](double g2) {
    auto integrand = [&](double theta) {
      if (theta < 1e-8) return 0.0;
      const double st = std::sin(theta);
      return min_inner(n2 / (st * st), g1, g2);
    };
    numerics::QuadratureSettings inner = settings;
    inner.abs_tol = std::max(settings.abs_tol, 1e-12);
    return numerics::integrate_finite(integrand, 0.0, mod.theta(), inner) / M_PI;
  };
  return expect_over_fso(lb.fso, sep_given_g2, settings);
}

double aser_mpsk_approx(const LinkBudget& lb, const Modulation& mod,
                        const numerics::QuadratureSettings& settings) {
  auto m = [&](double s) { return mgf(lb, s, settings); };
  return detail::three_point_sum(m, mod);
}

double aser_dpsk_ncfsk(const LinkBudget& lb, const Modulation& mod,
                       const numerics::QuadratureSettings& settings) {
  const double m = mod.m();
  const double g1 = lb.rf.gamma_bar;
  if (lb.strategy.kind == relay::RelayKind::fixed_gain) {
    const double c = lb.strategy.c;
    return expect_over_fso(
        lb.fso, [&](double g2) { return 0.5 * m / (m + g1 * g2 / (g2 + c)); }, settings);
  }
  return expect_over_fso(
      lb.fso, [&](double g2) { return 0.5 * min_inner(1.0 / m, g1, g2); }, settings);
}

double expect_2d(const LinkBudget& lb, const std::function<double(double, double)>& g,
                 const numerics::QuadratureSettings& settings) {
  const double g1bar = lb.rf.gamma_bar;
  auto inner = [&](double g2) {
    auto f = [&](double x) {
      return g(x, g2) * std::exp(-x / g1bar) / g1bar;
    };
    numerics::QuadratureSettings s2 = settings;
    s2.abs_tol = std::max(settings.abs_tol, 1e-13);
    return numerics::integrate_semi_infinite(f, 0.0, s2);
  };
  return expect_over_fso(lb.fso, inner, settings);
}

}  // namespace rfso::analytics::quad_path
