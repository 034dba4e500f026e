#include "rfso/channel/fso_snr.hpp"

#include <algorithm>
#include <cmath>

#include "rfso/errors.hpp"
#include "rfso/numerics/bessel.hpp"
#include "rfso/numerics/meijer.hpp"

namespace rfso::channel {

FsoSnrParams FsoSnrParams::create(MalagaParams malaga, double gamma_bar) {
  if (!(gamma_bar > 0)) throw DomainError("fso_snr: average SNR must be positive");
  return FsoSnrParams{std::move(malaga), gamma_bar};
}

double fso_snr_pdf(const FsoSnrParams& p, double gamma2) {
  if (!(gamma2 > 0)) throw DomainError("fso_snr_pdf: gamma must be positive");
  const auto& m = p.malaga;
  const double alpha = m.alpha();
  const double arg = 2.0 * std::sqrt(m.lambda_const() * std::sqrt(gamma2 / p.gamma_bar));
  double sum = 0.0;
  for (int k = 1; k <= m.beta(); ++k) {
    const double c = m.mixture_coeff()[k - 1];
    if (c == 0.0) continue;
    sum += 0.5 * c * std::pow(gamma2, 0.25 * (alpha + k) - 1.0) *
           std::pow(p.gamma_bar, -0.25 * (alpha + k)) * numerics::bessel_k(alpha - k, arg);
  }
  return sum;
}

double fso_snr_cdf(const FsoSnrParams& p, double gamma, CdfMethod method,
                   const numerics::QuadratureSettings& settings) {
  if (!(gamma > 0)) throw DomainError("fso_snr_cdf: gamma must be positive");
  const auto& m = p.malaga;
  const double alpha = m.alpha();
  if (method == CdfMethod::quadrature) {
    // substitute gamma2 = u^2 to remove the k=1 inverse-sqrt endpoint
    auto f = [&](double u) { return 2.0 * u * fso_snr_pdf(p, u * u); };
    return numerics::integrate_finite(f, 0.0, std::sqrt(gamma), settings);
  }
  const double z = m.lambda_const() * m.lambda_const() * gamma / (16.0 * p.gamma_bar);
  double sum = 0.0;
  for (int k = 1; k <= m.beta(); ++k) {
    const double c = m.mixture_coeff()[k - 1];
    if (c == 0.0) continue;
    numerics::MeijerGSpec spec;
    spec.m = 4;
    spec.n = 1;
    spec.a = {1.0};
    spec.b = {0.5 * alpha, 0.5 * (alpha + 1.0), 0.5 * k, 0.5 * (k + 1.0), 0.0};
    spec.z = z;
    const double coeff = c * std::pow(2.0, alpha + k) *
                         std::pow(m.lambda_const(), -0.5 * (alpha + k)) / (8.0 * M_PI);
    sum += coeff * numerics::meijer_g(spec, settings);
  }
  if (sum < -1e-7 || sum > 1.0 + 1e-7)
    throw EvaluationError("fso_snr_cdf: value escapes [0,1] beyond tolerance", sum,
                          std::abs(sum - std::clamp(sum, 0.0, 1.0)));
  return std::clamp(sum, 0.0, 1.0);
}

}  // namespace rfso::channel
