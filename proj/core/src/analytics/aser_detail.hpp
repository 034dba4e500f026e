#pragma once

#include <cmath>
#include <functional>
#include <vector>

#include "rfso/analytics/modulation.hpp"
#include "rfso/channel/malaga.hpp"
#include "rfso/errors.hpp"
#include "rfso/numerics/quadrature.hpp"

namespace rfso::analytics::detail {

/// K_k = c_k 2^{alpha+k} Lambda^{-(alpha+k)/2} / (8 pi); the common prefactor
/// of every kappa2/kappa3 Meijer-G sum. Zero where the mixture component is.
inline std::vector<double> survival_coefficients(const channel::MalagaParams& m) {
  std::vector<double> out(m.beta(), 0.0);
  for (int k = 1; k <= m.beta(); ++k) {
    const double c = m.mixture_coeff()[k - 1];
    if (c == 0.0) continue;
    out[k - 1] = c * std::pow(2.0, m.alpha() + k) *
                 std::pow(m.lambda_const(), -0.5 * (m.alpha() + k)) / (8.0 * M_PI);
  }
  return out;
}

/// (1/pi) Integral_0^Theta mgf(n^2 / sin^2 theta) d(theta). The integrand has
/// a removable limit 0 at theta -> 0 (the MGF vanishes as its argument grows).
inline double mpsk_theta_integral(const std::function<double(double)>& mgf,
                                  const Modulation& mod,
                                  const numerics::QuadratureSettings& settings) {
  const double n2 = mod.n() * mod.n();
  auto integrand = [&](double theta) {
    if (theta < 1e-8) return 0.0;
    const double sin_t = std::sin(theta);
    return mgf(n2 / (sin_t * sin_t));
  };
  return numerics::integrate_finite(integrand, 0.0, mod.theta(), settings) / M_PI;
}

/// Three-point MGF approximation of the MPSK ASER; the third weight is
/// exactly 0 at M = 2 and that term is skipped.
inline double three_point_sum(const std::function<double(double)>& mgf, const Modulation& mod) {
  const auto s = mod.s();
  const auto w = mod.weights();
  double out = 0.0;
  for (int i = 0; i < 3; ++i) {
    if (w[i] == 0.0) continue;
    out += w[i] * mgf(s[i]);
  }
  return out;
}

inline double checked_probability(double v, const char* what) {
  if (v < -1e-7 || v > 1.0 + 1e-7)
    throw EvaluationError(std::string(what) + ": value escapes [0,1] beyond tolerance", v,
                          std::abs(v - std::clamp(v, 0.0, 1.0)));
  return std::clamp(v, 0.0, 1.0);
}

}  // namespace rfso::analytics::detail
