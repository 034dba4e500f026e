#pragma once

#include <random>
#include <vector>

namespace rfso::channel {

/// Rayleigh RF hop: the instantaneous SNR is exponential with mean gamma_bar.
struct RayleighParams {
  double gamma_bar = 1.0;  // average SNR, linear scale

  static RayleighParams create(double gamma_bar);
};

double rayleigh_snr_pdf(const RayleighParams& p, double gamma);
double rayleigh_snr_cdf(const RayleighParams& p, double gamma);

std::vector<double> sample_rayleigh_snr(const RayleighParams& p, std::mt19937_64& rng,
                                        std::size_t count);
double sample_rayleigh_snr_one(const RayleighParams& p, std::mt19937_64& rng);

}  // namespace rfso::channel
