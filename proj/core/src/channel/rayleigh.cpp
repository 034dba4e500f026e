#include "rfso/channel/rayleigh.hpp"

#include <cmath>

#include "rfso/errors.hpp"

namespace rfso::channel {

RayleighParams RayleighParams::create(double gamma_bar) {
  if (!(gamma_bar > 0)) throw DomainError("rayleigh: average SNR must be positive");
  return RayleighParams{gamma_bar};
}

double rayleigh_snr_pdf(const RayleighParams& p, double gamma) {
  if (!(gamma >= 0)) throw DomainError("rayleigh_snr_pdf: gamma must be nonnegative");
  return std::exp(-gamma / p.gamma_bar) / p.gamma_bar;
}

double rayleigh_snr_cdf(const RayleighParams& p, double gamma) {
  if (!(gamma >= 0)) throw DomainError("rayleigh_snr_cdf: gamma must be nonnegative");
  return -std::expm1(-gamma / p.gamma_bar);
}

double sample_rayleigh_snr_one(const RayleighParams& p, std::mt19937_64& rng) {
  std::exponential_distribution<double> d(1.0 / p.gamma_bar);
  return d(rng);
}

std::vector<double> sample_rayleigh_snr(const RayleighParams& p, std::mt19937_64& rng,
                                        std::size_t count) {
  if (count < 1) throw DomainError("sample_rayleigh_snr: count must be >= 1");
  std::vector<double> out(count);
  for (auto& v : out) v = sample_rayleigh_snr_one(p, rng);
  return out;
}

}  // namespace rfso::channel
