#include "rfso/asymptotics/high_snr.hpp"

#include <cmath>

#include "rfso/errors.hpp"
#include "rfso/numerics/gamma.hpp"

namespace rfso::asymptotics {

double xi_exact(const Modulation& mpsk) {
  const double theta = mpsk.theta();
  const double n2 = mpsk.n() * mpsk.n();
  return (2.0 * theta - std::sin(2.0 * theta)) / (4.0 * n2 * M_PI);
}

double xi_approx(const Modulation& mpsk) {
  const auto s = mpsk.s();
  const auto w = mpsk.weights();
  double out = 0.0;
  for (int i = 0; i < 3; ++i) out += w[i] / s[i];
  return out;
}

double aser_asymptotic_fixed(const Modulation& mod, double gamma_bar_1, XiVariant variant) {
  if (!(gamma_bar_1 > 0)) throw DomainError("aser_asymptotic_fixed: SNR must be positive");
  if (mod.is_mpsk()) {
    const double xi = variant == XiVariant::exact ? xi_exact(mod) : xi_approx(mod);
    return xi / gamma_bar_1;
  }
  return mod.m() / (2.0 * gamma_bar_1);
}

std::vector<double> bk_coefficients(const channel::MalagaParams& p) {
  if (!(p.alpha() > p.beta()))
    throw Error(
        "bk_coefficients: requires alpha > beta; Gamma(alpha-k) diverges otherwise and the "
        "half-order expansion is invalid");
  if (p.is_gamma_gamma_case() && p.beta() > 1)
    throw Error(
        "bk_coefficients: in the Gamma-Gamma case (xi = 0) the only surviving mixture "
        "component is k = beta, and the half-order expansion does not converge for beta > 1");
  std::vector<double> out(p.beta(), 0.0);
  for (int k = 1; k <= p.beta(); ++k) {
    const double c = p.mixture_coeff()[k - 1];
    if (c == 0.0) continue;
    out[k - 1] = 0.25 * c * std::pow(p.lambda_const(), 0.5 * (k - p.alpha())) *
                 numerics::gamma_fn(0.5 * k) * numerics::gamma_fn(p.alpha() - k);
  }
  return out;
}

double d_constant(const Modulation& mpsk) {
  const double M = mpsk.order();
  const double rs1 = mpsk.n();  // sqrt(s1)
  return (8.0 * M + 3.0 * std::sqrt(3.0) * M + (6.0 * M - 12.0) * rs1 - 12.0) /
         (24.0 * M * rs1);
}

double aser_asymptotic_channel_dependent(const Modulation& mod,
                                         const channel::MalagaParams& p,
                                         double gamma_bar_2) {
  if (!(gamma_bar_2 > 0))
    throw DomainError("aser_asymptotic_channel_dependent: SNR must be positive");
  const double b1 = bk_coefficients(p)[0];
  const double scale = 1.0 / std::sqrt(gamma_bar_2);
  if (mod.is_mpsk()) return b1 * d_constant(mod) * scale;
  return 0.5 * b1 * std::sqrt(static_cast<double>(mod.m())) * scale;
}

double snr_gap_fixed(const Modulation& mpsk, int m, XiVariant variant) {
  if (m != 1 && m != 2) throw DomainError("snr_gap_fixed: m must be 1 (DPSK) or 2 (NCFSK)");
  const double xi = variant == XiVariant::exact ? xi_exact(mpsk) : xi_approx(mpsk);
  return 10.0 * std::log10(m / (2.0 * xi));
}

double snr_gap_fixed_mpsk(const Modulation& mod_a, const Modulation& mod_b, XiVariant variant) {
  const double xa = variant == XiVariant::exact ? xi_exact(mod_a) : xi_approx(mod_a);
  const double xb = variant == XiVariant::exact ? xi_exact(mod_b) : xi_approx(mod_b);
  return 10.0 * std::log10(xb / xa);
}

double snr_gap_channel_dependent(const Modulation& mpsk, int m) {
  if (m != 1 && m != 2)
    throw DomainError("snr_gap_channel_dependent: m must be 1 (DPSK) or 2 (NCFSK)");
  const double d = d_constant(mpsk);
  return 10.0 * std::log10(m / (4.0 * d * d));
}

AsymptoticReport asymptotic_report(const LinkBudget& lb, const Modulation& mod,
                                   XiVariant variant) {
  AsymptoticReport r;
  if (lb.strategy.kind == relay::RelayKind::fixed_gain) {
    r.diversity_order = 1.0;
    r.leading_coefficient =
        mod.is_mpsk() ? (variant == XiVariant::exact ? xi_exact(mod) : xi_approx(mod))
                      : 0.5 * mod.m();
    r.validity_note =
        "independent of the FSO turbulence parameters; dominated by the RF-hop average SNR";
  } else {
    const double b1 = bk_coefficients(lb.fso.malaga)[0];
    r.diversity_order = 0.5;
    r.leading_coefficient = mod.is_mpsk()
                                ? b1 * d_constant(mod)
                                : 0.5 * b1 * std::sqrt(static_cast<double>(mod.m()));
    r.validity_note =
        "depends on the average SNR and the turbulence condition; convergence to the "
        "half-order slope is slow below ~50 dB";
  }
  return r;
}

}  // namespace rfso::asymptotics
