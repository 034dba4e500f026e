#include "rfso/analytics/fixed_gain.hpp"

#include <algorithm>
#include <cmath>

#include "aser_detail.hpp"
#include "rfso/analytics/channel_dependent.hpp"
#include "rfso/errors.hpp"

namespace rfso::analytics {

FixedGainAnalytics::FixedGainAnalytics(const LinkBudget& lb,
                                       numerics::QuadratureSettings settings,
                                       std::shared_ptr<const MalagaMeijerFamilies> families)
    : lb_(lb), settings_(settings), families_(std::move(families)) {
  if (lb_.strategy.kind != relay::RelayKind::fixed_gain)
    throw ConfigError("fixed-gain analytics constructed with a channel-dependent strategy");
  if (!families_) families_ = MalagaMeijerFamilies::build(lb_.fso.malaga, settings_);
  coeff_ = detail::survival_coefficients(lb_.fso.malaga);
}

double FixedGainAnalytics::survival_sum_mgf(double z) const {
  double sum = 0.0;
  for (int k = 1; k <= lb_.fso.malaga.beta(); ++k) {
    if (coeff_[k - 1] == 0.0) continue;
    sum += coeff_[k - 1] * families_->fixed_mgf(k)(z);
  }
  return sum;
}

double FixedGainAnalytics::cdf(double gamma) const {
  if (gamma < 0) throw DomainError("cdf: gamma must be nonnegative");
  if (gamma == 0) return 0.0;
  const auto& m = lb_.fso.malaga;
  const double lam = m.lambda_const();
  const double z =
      lam * lam * lb_.strategy.c * gamma / (16.0 * lb_.rf.gamma_bar * lb_.fso.gamma_bar);
  double sum = 0.0;
  for (int k = 1; k <= m.beta(); ++k) {
    if (coeff_[k - 1] == 0.0) continue;
    sum += coeff_[k - 1] * families_->fixed_cdf(k)(z);
  }
  const double f = 1.0 - std::exp(-gamma / lb_.rf.gamma_bar) * sum;
  return detail::checked_probability(f, "cdf_fixed_gain");
}

double FixedGainAnalytics::mgf(double s) const {
  if (s < 0) throw DomainError("mgf: s must be nonnegative");
  if (s == 0) return 1.0;
  const auto& m = lb_.fso.malaga;
  const double g1 = lb_.rf.gamma_bar;
  const double lam = m.lambda_const();
  const double z = lam * lam * lb_.strategy.c / (16.0 * lb_.fso.gamma_bar * (1.0 + g1 * s));
  const double frac = g1 * s / (1.0 + g1 * s);
  return 1.0 - frac * survival_sum_mgf(z);
}

double FixedGainAnalytics::aser_mpsk_exact(const Modulation& mod) const {
  auto m = [this](double s) { return mgf(s); };
  return detail::checked_probability(detail::mpsk_theta_integral(m, mod, settings_),
                                     "aser_mpsk_exact");
}

double FixedGainAnalytics::aser_mpsk_approx(const Modulation& mod) const {
  auto m = [this](double s) { return mgf(s); };
  return detail::three_point_sum(m, mod);
}

double FixedGainAnalytics::aser_dpsk_ncfsk(const Modulation& mod) const {
  const double m = mod.m();
  const auto& mal = lb_.fso.malaga;
  const double g1 = lb_.rf.gamma_bar;
  const double lam = mal.lambda_const();
  const double z = m * lam * lam * lb_.strategy.c / (16.0 * lb_.fso.gamma_bar * (m + g1));
  const double p = 0.5 - 0.5 * g1 / (m + g1) * survival_sum_mgf(z);
  return detail::checked_probability(p, "aser_dpsk_ncfsk_fixed");
}

namespace {

template <typename Fn>
double dispatch(const LinkBudget& lb, Fn&& fn) {
  if (lb.strategy.kind == relay::RelayKind::fixed_gain) {
    FixedGainAnalytics a(lb);
    return fn(a);
  }
  ChannelDependentAnalytics a(lb);
  return fn(a);
}

}  // namespace

double cdf_end_to_end(const LinkBudget& lb, double gamma) {
  return dispatch(lb, [&](const auto& a) { return a.cdf(gamma); });
}

double mgf_end_to_end(const LinkBudget& lb, double s) {
  return dispatch(lb, [&](const auto& a) { return a.mgf(s); });
}

double aser_mpsk_exact(const LinkBudget& lb, const Modulation& mod) {
  return dispatch(lb, [&](const auto& a) { return a.aser_mpsk_exact(mod); });
}

double aser_mpsk_approx(const LinkBudget& lb, const Modulation& mod) {
  return dispatch(lb, [&](const auto& a) { return a.aser_mpsk_approx(mod); });
}

double aser_dpsk_ncfsk(const LinkBudget& lb, const Modulation& mod) {
  return dispatch(lb, [&](const auto& a) { return a.aser_dpsk_ncfsk(mod); });
}

}  // namespace rfso::analytics
