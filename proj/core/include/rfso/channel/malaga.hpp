#pragma once

#include <random>
#include <vector>

namespace rfso::channel {

/// Malaga (M-distribution) irradiance fading parameters with the derived
/// constants used throughout: xi = 2 b0 (1 - rho), Omega' (coherent power),
/// Lambda = alpha beta / (xi beta + Omega'), and the per-component products
/// c_k = A a_k of the finite mixture representation. beta is restricted to
/// integers, which keeps the mixture finite.
class MalagaParams {
 public:
  static MalagaParams create(double alpha, int beta, double rho, double b0, double omega,
                             double phase_diff = 0.0);

  double alpha() const { return alpha_; }
  int beta() const { return beta_; }
  double rho() const { return rho_; }
  double b0() const { return b0_; }
  double omega() const { return omega_; }
  double phase_diff() const { return phase_diff_; }

  double xi() const { return xi_; }
  double omega_prime() const { return omega_prime_; }
  double lambda_const() const { return lambda_; }
  double mean_irradiance() const { return xi_ + omega_prime_; }

  /// c_k = A * a_k for k = 1..beta (index k-1); zero entries mark vanished
  /// mixture components (K case: k >= 2; Gamma-Gamma case: k < beta).
  const std::vector<double>& mixture_coeff() const { return coeff_; }
  /// Mixture weights w_k = (A/2) a_k Lambda^{-(alpha+k)/2} Gamma(alpha) Gamma(k);
  /// they sum to 1.
  const std::vector<double>& mixture_weight() const { return weight_; }

  /// Normalization constant A. Only finite for xi > 0; the Gamma-Gamma limit
  /// (xi = 0) keeps A*a_k finite while A alone diverges or vanishes.
  double a_const() const;
  /// a_k list, k = 1..beta. Requires xi > 0 like a_const().
  std::vector<double> a_coefficients() const;

  bool is_k_case() const { return rho_ == 0.0 && omega_ == 0.0; }
  bool is_gamma_gamma_case() const { return xi_ == 0.0; }

 private:
  MalagaParams() = default;
  double alpha_ = 0, rho_ = 0, b0_ = 0, omega_ = 0, phase_diff_ = 0;
  int beta_ = 0;
  double xi_ = 0, omega_prime_ = 0, lambda_ = 0;
  std::vector<double> coeff_, weight_;
};

/// K-distribution special case: rho = 0, Omega = 0. Only the k = 1 mixture
/// component survives, with A a_1 Lambda^{-(alpha+1)/2} = 2 / Gamma(alpha).
MalagaParams make_k_distribution(double alpha, double b0);

/// Gamma-Gamma special case: rho = 1 with (Omega, b0, phase) chosen so that
/// Omega' = 1 and xi = 0. Only the k = beta component survives, with
/// A a_beta = 2 (alpha beta)^{(alpha+beta)/2} / (Gamma(alpha) Gamma(beta)).
MalagaParams make_gamma_gamma(double alpha, int beta);

/// Irradiance PDF f_I(i) = A sum_k a_k i^{(alpha+k)/2-1} K_{alpha-k}(2 sqrt(Lambda i)).
double malaga_pdf(const MalagaParams& p, double i);

/// I.i.d. draws from the Malaga law via its Gamma-Gamma mixture: pick
/// component k with probability w_k, then I = X*Y/Lambda with X ~ Gamma(alpha)
/// and Y ~ Gamma(k) (component mean alpha*k/Lambda).
std::vector<double> sample_malaga(const MalagaParams& p, std::mt19937_64& rng,
                                  std::size_t count);

/// Single draw used by the Monte Carlo engine.
double sample_malaga_one(const MalagaParams& p, std::mt19937_64& rng);

}  // namespace rfso::channel
