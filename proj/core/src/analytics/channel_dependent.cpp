#include "rfso/analytics/channel_dependent.hpp"

#include <algorithm>
#include <cmath>

#include "aser_detail.hpp"
#include "rfso/errors.hpp"

namespace rfso::analytics {

ChannelDependentAnalytics::ChannelDependentAnalytics(
    const LinkBudget& lb, numerics::QuadratureSettings settings,
    std::shared_ptr<const MalagaMeijerFamilies> families)
    : lb_(lb), settings_(settings), families_(std::move(families)) {
  if (lb_.strategy.kind != relay::RelayKind::channel_dependent)
    throw ConfigError("channel-dependent analytics constructed with a fixed-gain strategy");
  if (!families_) families_ = MalagaMeijerFamilies::build(lb_.fso.malaga, settings_);
  coeff_ = detail::survival_coefficients(lb_.fso.malaga);
}

double ChannelDependentAnalytics::fso_cdf(double gamma) const {
  if (!(gamma > 0)) return 0.0;
  const auto& m = lb_.fso.malaga;
  const double lam = m.lambda_const();
  const double z = lam * lam * gamma / (16.0 * lb_.fso.gamma_bar);
  double sum = 0.0;
  for (int k = 1; k <= m.beta(); ++k) {
    if (coeff_[k - 1] == 0.0) continue;
    sum += coeff_[k - 1] * families_->cd_cdf(k)(z);
  }
  return detail::checked_probability(sum, "fso_snr_cdf");
}

double ChannelDependentAnalytics::cdf(double gamma) const {
  if (gamma < 0) throw DomainError("cdf: gamma must be nonnegative");
  if (gamma == 0) return 0.0;
  const double e = std::exp(-gamma / lb_.rf.gamma_bar);
  const double f = 1.0 - e + e * fso_cdf(gamma);
  return detail::checked_probability(f, "cdf_channel_dependent");
}

double ChannelDependentAnalytics::survival_sum_mgf(double z) const {
  double sum = 0.0;
  for (int k = 1; k <= lb_.fso.malaga.beta(); ++k) {
    if (coeff_[k - 1] == 0.0) continue;
    sum += coeff_[k - 1] * families_->cd_mgf(k)(z);
  }
  return sum;
}

double ChannelDependentAnalytics::mgf(double s) const {
  if (s < 0) throw DomainError("mgf: s must be nonnegative");
  if (s == 0) return 1.0;
  const double g1 = lb_.rf.gamma_bar;
  const auto& m = lb_.fso.malaga;
  const double lam = m.lambda_const();
  const double z = lam * lam * g1 / (16.0 * lb_.fso.gamma_bar * (1.0 + g1 * s));
  const double frac = g1 * s / (1.0 + g1 * s);
  return 1.0 - frac + frac * survival_sum_mgf(z);
}

double ChannelDependentAnalytics::mgf_intermediate_form(double s) const {
  if (s < 0) throw DomainError("mgf: s must be nonnegative");
  if (s == 0) return 1.0;
  const double g1 = lb_.rf.gamma_bar;
  const auto& m = lb_.fso.malaga;
  const double alpha = m.alpha();
  const double lam = m.lambda_const();
  const double z = lam * lam * g1 / (16.0 * lb_.fso.gamma_bar * (1.0 + g1 * s));
  double sum = 0.0;
  for (int k = 1; k <= m.beta(); ++k) {
    if (coeff_[k - 1] == 0.0) continue;
    numerics::MeijerGSpec spec;
    spec.m = 4;
    spec.n = 2;
    spec.a = {0.0, 1.0};
    spec.b = {0.5 * alpha, 0.5 * (alpha + 1.0), 0.5 * k, 0.5 * (k + 1.0), 0.0};
    spec.z = z;
    sum += coeff_[k - 1] * numerics::meijer_g(spec, settings_);
  }
  const double frac = g1 * s / (1.0 + g1 * s);
  return 1.0 - frac + frac * sum;
}

double ChannelDependentAnalytics::aser_mpsk_exact(const Modulation& mod) const {
  auto m = [this](double s) { return mgf(s); };
  return detail::checked_probability(detail::mpsk_theta_integral(m, mod, settings_),
                                     "aser_mpsk_channel_dependent");
}

double ChannelDependentAnalytics::aser_mpsk_approx(const Modulation& mod) const {
  auto m = [this](double s) { return mgf(s); };
  return detail::three_point_sum(m, mod);
}

double ChannelDependentAnalytics::aser_dpsk_ncfsk(const Modulation& mod) const {
  const double m = mod.m();
  const double g1 = lb_.rf.gamma_bar;
  const auto& mal = lb_.fso.malaga;
  const double lam = mal.lambda_const();
  const double z = m * lam * lam * g1 / (16.0 * lb_.fso.gamma_bar * (m + g1));
  const double frac = g1 / (m + g1);
  const double p = 0.5 - 0.5 * frac + 0.5 * frac * survival_sum_mgf(z);
  return detail::checked_probability(p, "aser_dpsk_ncfsk_channel_dependent");
}

}  // namespace rfso::analytics
