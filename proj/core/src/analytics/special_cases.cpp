#include "rfso/analytics/special_cases.hpp"

#include <cmath>

#include "aser_detail.hpp"
#include "rfso/errors.hpp"
#include "rfso/numerics/gamma.hpp"
#include "rfso/numerics/meijer.hpp"

namespace rfso::analytics {

namespace {

using numerics::MeijerGSpec;
using numerics::QuadratureSettings;

void check_kind(SpecialKind kind, const channel::MalagaParams& m) {
  if (kind == SpecialKind::k_distribution) {
    if (!m.is_k_case())
      throw ConfigError("special-case formula: parameters are not a K reduction (rho=0, omega=0)");
  } else {
    if (!m.is_gamma_gamma_case() || std::abs(m.omega_prime() - 1.0) > 1e-12)
      throw ConfigError(
          "special-case formula: parameters are not a Gamma-Gamma reduction (xi=0, omega'=1)");
  }
}

struct SpecialTerms {
  double prefactor;   // multiplies Gamma1-dependent fraction * G(...)
  MeijerGSpec spec;   // parameter lists; caller fills z
};

// prefactor and kappa list shared by the fixed-gain (q=5, with trailing 0)
// and channel-dependent (q=4) dedicated forms
SpecialTerms make_terms(SpecialKind kind, const channel::MalagaParams& m, bool fixed_gain) {
  SpecialTerms t;
  const double alpha = m.alpha();
  if (kind == SpecialKind::k_distribution) {
    t.prefactor = std::exp(alpha * M_LN2 - numerics::log_gamma(alpha)) / (2.0 * M_PI);
    t.spec.b = {0.5 * alpha, 0.5 * (alpha + 1.0), 0.5, 1.0};
  } else {
    const double beta = m.beta();
    t.prefactor = std::exp((alpha + beta) * M_LN2 - numerics::log_gamma(alpha) -
                           numerics::log_gamma(beta)) /
                  (4.0 * M_PI);
    t.spec.b = {0.5 * alpha, 0.5 * (alpha + 1.0), 0.5 * beta, 0.5 * (beta + 1.0)};
  }
  if (fixed_gain) {
    t.spec.b.push_back(0.0);
    t.spec.m = 5;
    t.spec.a = {0.0};
  } else {
    t.spec.m = 4;
    t.spec.a = {1.0};
  }
  t.spec.n = 1;
  return t;
}

}  // namespace

double mgf_fixed_gain_special(SpecialKind kind, const LinkBudget& lb, double s,
                              const QuadratureSettings& settings) {
  check_kind(kind, lb.fso.malaga);
  if (lb.strategy.kind != relay::RelayKind::fixed_gain)
    throw ConfigError("mgf_fixed_gain_special: strategy is not fixed-gain");
  if (s < 0) throw DomainError("mgf: s must be nonnegative");
  if (s == 0) return 1.0;
  const double g1 = lb.rf.gamma_bar;
  const double lam = lb.fso.malaga.lambda_const();
  auto t = make_terms(kind, lb.fso.malaga, true);
  t.spec.z = lam * lam * lb.strategy.c / (16.0 * lb.fso.gamma_bar * (1.0 + g1 * s));
  return 1.0 - g1 * s / (1.0 + g1 * s) * t.prefactor * numerics::meijer_g(t.spec, settings);
}

double aser_dpsk_ncfsk_fixed_special(SpecialKind kind, const LinkBudget& lb,
                                     const Modulation& mod,
                                     const QuadratureSettings& settings) {
  check_kind(kind, lb.fso.malaga);
  if (lb.strategy.kind != relay::RelayKind::fixed_gain)
    throw ConfigError("aser_dpsk_ncfsk_fixed_special: strategy is not fixed-gain");
  const double m = mod.m();
  const double g1 = lb.rf.gamma_bar;
  const double lam = lb.fso.malaga.lambda_const();
  auto t = make_terms(kind, lb.fso.malaga, true);
  t.spec.z = m * lam * lam * lb.strategy.c / (16.0 * lb.fso.gamma_bar * (m + g1));
  const double p =
      0.5 - 0.5 * g1 / (m + g1) * t.prefactor * numerics::meijer_g(t.spec, settings);
  return detail::checked_probability(p, "aser_dpsk_ncfsk_fixed_special");
}

double mgf_channel_dependent_special(SpecialKind kind, const LinkBudget& lb, double s,
                                     const QuadratureSettings& settings) {
  check_kind(kind, lb.fso.malaga);
  if (lb.strategy.kind != relay::RelayKind::channel_dependent)
    throw ConfigError("mgf_channel_dependent_special: strategy is not channel-dependent");
  if (s < 0) throw DomainError("mgf: s must be nonnegative");
  if (s == 0) return 1.0;
  const double g1 = lb.rf.gamma_bar;
  const double lam = lb.fso.malaga.lambda_const();
  auto t = make_terms(kind, lb.fso.malaga, false);
  t.spec.z = lam * lam * g1 / (16.0 * lb.fso.gamma_bar * (1.0 + g1 * s));
  const double frac = g1 * s / (1.0 + g1 * s);
  return 1.0 - frac + frac * t.prefactor * numerics::meijer_g(t.spec, settings);
}

double aser_dpsk_ncfsk_channel_dependent_special(SpecialKind kind, const LinkBudget& lb,
                                                 const Modulation& mod,
                                                 const QuadratureSettings& settings) {
  check_kind(kind, lb.fso.malaga);
  if (lb.strategy.kind != relay::RelayKind::channel_dependent)
    throw ConfigError(
        "aser_dpsk_ncfsk_channel_dependent_special: strategy is not channel-dependent");
  const double m = mod.m();
  const double g1 = lb.rf.gamma_bar;
  const double lam = lb.fso.malaga.lambda_const();
  auto t = make_terms(kind, lb.fso.malaga, false);
  t.spec.z = m * lam * lam * g1 / (16.0 * lb.fso.gamma_bar * (m + g1));
  const double frac = g1 / (m + g1);
  const double p =
      0.5 - 0.5 * frac + 0.5 * frac * t.prefactor * numerics::meijer_g(t.spec, settings);
  return detail::checked_probability(p, "aser_dpsk_ncfsk_channel_dependent_special");
}

}  // namespace rfso::analytics
