#pragma once

#include <cstdint>
#include <functional>
#include <random>
#include <vector>

#include "rfso/analytics/link_budget.hpp"
#include "rfso/analytics/modulation.hpp"

namespace rfso::simulate {

using analytics::LinkBudget;
using analytics::Modulation;

/// Monte Carlo run setup. Estimates are a function of (samples, seed) only:
/// samples are drawn in fixed 4096-sample blocks whose substreams derive from
/// (seed, block index), and block partials are reduced in block order, so
/// results are bit-identical for any chunk_size and worker count. chunk_size
/// is kept as a parallel scheduling hint.
struct McConfig {
  std::size_t samples = 1'000'000;
  std::uint64_t seed = 0x5eed5eed5eedULL;
  std::size_t chunk_size = 4096;
  double confidence_level = 0.997;  // ~ +-3 sigma

  void validate() const;
};

struct McEstimate {
  double mean = 0.0;
  double std_error = 0.0;
  double ci_low = 0.0;
  double ci_high = 0.0;
  std::size_t samples_used = 0;
};

/// Semi-analytic ASER estimate: average of the exact conditional SEP over
/// end-to-end SNR draws combined by the true relaying law (fixed-gain
/// gamma1*gamma2/(gamma2+C) or the exact channel-dependent
/// gamma1*gamma2/(gamma1+gamma2+1), not the min bound).
McEstimate estimate_aser(const LinkBudget& lb, const Modulation& mod, const McConfig& cfg);

/// Empirical Pr[gamma_end <= gamma] with the same draw discipline.
McEstimate estimate_cdf_point(const LinkBudget& lb, double gamma, const McConfig& cfg);

/// Symbol-by-symbol detection cross-check (BPSK/QPSK only): draws Gaussian
/// noise per symbol instead of averaging the conditional SEP.
McEstimate estimate_aser_symbol_level(const LinkBudget& lb, const Modulation& mod,
                                      const McConfig& cfg);

/// Deterministic draws for external analysis (cmd_sample): irradiance or
/// end-to-end SNR, one value per sample, same block discipline as above.
std::vector<double> draw_irradiance(const channel::MalagaParams& p, std::uint64_t seed,
                                    std::size_t count);
std::vector<double> draw_end_to_end_snr(const LinkBudget& lb, std::uint64_t seed,
                                        std::size_t count);

/// Quantile of the standard normal (Acklam's approximation, |err| < 1.2e-9).
double normal_quantile(double p);

/// Generic block-deterministic mean estimator over per-sample values in [0,1];
/// exposed for the engine's own tests.
McEstimate block_mc(std::size_t samples, std::uint64_t seed, double confidence_level,
                    const std::function<double(std::mt19937_64&)>& per_sample);

}  // namespace rfso::simulate
