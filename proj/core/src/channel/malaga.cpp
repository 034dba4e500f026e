#include "rfso/channel/malaga.hpp"

#include <cmath>

#include "rfso/errors.hpp"
#include "rfso/numerics/bessel.hpp"
#include "rfso/numerics/gamma.hpp"

namespace rfso::channel {

using numerics::bessel_k;
using numerics::binomial;
using numerics::log_gamma;

MalagaParams MalagaParams::create(double alpha, int beta, double rho, double b0, double omega,
                                  double phase_diff) {
  if (!(alpha > 0)) throw DomainError("malaga: alpha must be positive");
  if (beta < 1) throw DomainError("malaga: beta must be a positive integer");
  if (!(rho >= 0.0 && rho <= 1.0)) throw DomainError("malaga: rho must lie in [0, 1]");
  if (!(b0 > 0)) throw DomainError("malaga: b0 must be positive");
  if (!(omega >= 0)) throw DomainError("malaga: omega must be nonnegative");

  MalagaParams p;
  p.alpha_ = alpha;
  p.beta_ = beta;
  p.rho_ = rho;
  p.b0_ = b0;
  p.omega_ = omega;
  p.phase_diff_ = phase_diff;
  p.xi_ = 2.0 * b0 * (1.0 - rho);
  p.omega_prime_ =
      omega + rho * 2.0 * b0 + 2.0 * std::sqrt(rho * 2.0 * b0 * omega) * std::cos(phase_diff);
  const double denom = p.xi_ * beta + p.omega_prime_;
  if (!(denom > 0)) throw DomainError("malaga: xi*beta + omega' must be positive");
  p.lambda_ = alpha * beta / denom;

  p.coeff_.assign(beta, 0.0);
  p.weight_.assign(beta, 0.0);
  const double ln_lambda = std::log(p.lambda_);
  if (p.xi_ > 0.0) {
    const double ln_xi = std::log(p.xi_);
    const double ln_denom = std::log(denom);
    const double ln_a_base = std::log(2.0) + 0.5 * alpha * std::log(alpha) -
                             (1.0 + 0.5 * alpha) * ln_xi - log_gamma(alpha) +
                             (0.5 * alpha + beta) * (std::log(p.xi_ * beta) - ln_denom);
    for (int k = 1; k <= beta; ++k) {
      if (k >= 2 && p.omega_prime_ == 0.0) break;  // (omega'/xi)^(k-1) factor vanishes
      double ln_ak = std::log(binomial(beta - 1, k - 1)) + (1.0 - 0.5 * k) * ln_denom -
                     log_gamma(k) + 0.5 * k * (std::log(alpha) - std::log(double(beta)));
      if (k >= 2) ln_ak += (k - 1) * (std::log(p.omega_prime_) - ln_xi);
      p.coeff_[k - 1] = std::exp(ln_a_base + ln_ak);
    }
  } else {
    // Gamma-Gamma limit: A*a_k -> 0 for k < beta; the surviving product is
    // A a_beta = 2 Lambda^{(alpha+beta)/2} / (Gamma(alpha) Gamma(beta)).
    p.coeff_[beta - 1] =
        std::exp(std::log(2.0) + 0.5 * (alpha + beta) * ln_lambda - log_gamma(alpha) -
                 log_gamma(beta));
  }

  double wsum = 0.0;
  for (int k = 1; k <= beta; ++k) {
    if (p.coeff_[k - 1] == 0.0) continue;
    p.weight_[k - 1] = std::exp(std::log(p.coeff_[k - 1] / 2.0) -
                                0.5 * (alpha + k) * ln_lambda + log_gamma(alpha) + log_gamma(k));
    wsum += p.weight_[k - 1];
  }
  if (!(wsum > 0.0) || !std::isfinite(wsum))
    throw ConfigError("malaga: mixture weights degenerate (numerical underflow)");
  return p;
}

double MalagaParams::a_const() const {
  if (!(xi_ > 0.0))
    throw RangeError("malaga: A is not finite in the Gamma-Gamma limit (xi = 0)");
  return std::exp(std::log(2.0) + 0.5 * alpha_ * std::log(alpha_) -
                  (1.0 + 0.5 * alpha_) * std::log(xi_) - log_gamma(alpha_) +
                  (0.5 * alpha_ + beta_) *
                      (std::log(xi_ * beta_) - std::log(xi_ * beta_ + omega_prime_)));
}

std::vector<double> MalagaParams::a_coefficients() const {
  const double a = a_const();
  std::vector<double> out(coeff_.size());
  for (std::size_t i = 0; i < coeff_.size(); ++i) out[i] = coeff_[i] / a;
  return out;
}

MalagaParams make_k_distribution(double alpha, double b0) {
  return MalagaParams::create(alpha, 1, 0.0, b0, 0.0, 0.0);
}

MalagaParams make_gamma_gamma(double alpha, int beta) {
  // rho = 1 gives xi = 0; Omega = 1/4 and 2 b0 = 1/4 with zero phase give
  // Omega' = (sqrt(Omega) + sqrt(2 b0))^2 = 1.
  return MalagaParams::create(alpha, beta, 1.0, 0.125, 0.25, 0.0);
}

double malaga_pdf(const MalagaParams& p, double i) {
  if (!(i > 0)) throw DomainError("malaga_pdf: irradiance must be positive");
  const double arg = 2.0 * std::sqrt(p.lambda_const() * i);
  double sum = 0.0;
  for (int k = 1; k <= p.beta(); ++k) {
    const double c = p.mixture_coeff()[k - 1];
    if (c == 0.0) continue;
    sum += c * std::pow(i, 0.5 * (p.alpha() + k) - 1.0) * bessel_k(p.alpha() - k, arg);
  }
  return sum;
}

double sample_malaga_one(const MalagaParams& p, std::mt19937_64& rng) {
  std::uniform_real_distribution<double> unif(0.0, 1.0);
  const double u = unif(rng);
  int k = p.beta();
  double acc = 0.0;
  for (int j = 1; j <= p.beta(); ++j) {
    acc += p.mixture_weight()[j - 1];
    if (u <= acc) {
      k = j;
      break;
    }
  }
  std::gamma_distribution<double> gx(p.alpha(), 1.0);
  std::gamma_distribution<double> gy(static_cast<double>(k), 1.0);
  return gx(rng) * gy(rng) / p.lambda_const();
}

std::vector<double> sample_malaga(const MalagaParams& p, std::mt19937_64& rng,
                                  std::size_t count) {
  if (count < 1) throw DomainError("sample_malaga: count must be >= 1");
  std::vector<double> out(count);
  for (auto& v : out) v = sample_malaga_one(p, rng);
  return out;
}

}  // namespace rfso::channel
