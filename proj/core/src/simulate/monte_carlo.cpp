#include "rfso/simulate/monte_carlo.hpp"

#include <cmath>

#include "rfso/errors.hpp"
#include "rfso/relay/combining.hpp"
#include "rfso/simulate/sep.hpp"
#include "rfso/support/parallel.hpp"

namespace rfso::simulate {

namespace {

constexpr std::size_t kBlock = 4096;

std::uint64_t splitmix64(std::uint64_t x) {
  x += 0x9e3779b97f4a7c15ULL;
  x = (x ^ (x >> 30)) * 0xbf58476d1ce4e5b9ULL;
  x = (x ^ (x >> 27)) * 0x94d049bb133111ebULL;
  return x ^ (x >> 31);
}

std::mt19937_64 block_rng(std::uint64_t seed, std::uint64_t block) {
  return std::mt19937_64(splitmix64(seed ^ splitmix64(block + 1)));
}

double combine_true(const relay::RelayStrategy& s, double g1, double g2) {
  if (s.kind == relay::RelayKind::fixed_gain) return relay::combine_fixed_gain(g1, g2, s.c);
  return relay::combine_channel_dependent(g1, g2);
}

double draw_end_to_end_one(const LinkBudget& lb, std::mt19937_64& rng) {
  const double g1 = channel::sample_rayleigh_snr_one(lb.rf, rng);
  const double irr = channel::sample_malaga_one(lb.fso.malaga, rng);
  const double g2 = lb.fso.gamma_bar * irr * irr;
  return combine_true(lb.strategy, g1, g2);
}

}  // namespace

void McConfig::validate() const {
  if (samples < 1) throw ConfigError("mc: samples must be >= 1");
  if (chunk_size < 1 || chunk_size > samples)
    throw ConfigError("mc: need samples >= chunk_size >= 1");
  if (!(confidence_level > 0.0 && confidence_level < 1.0))
    throw ConfigError("mc: confidence level must lie in (0, 1)");
}

double normal_quantile(double p) {
  if (!(p > 0.0 && p < 1.0)) throw DomainError("normal_quantile: p must lie in (0,1)");
  // Acklam's rational approximation
  static const double a[] = {-3.969683028665376e+01, 2.209460984245205e+02,
                             -2.759285104469687e+02, 1.383577518672690e+02,
                             -3.066479806614716e+01, 2.506628277459239e+00};
  static const double b[] = {-5.447609879822406e+01, 1.615858368580409e+02,
                             -1.556989798598866e+02, 6.680131188771972e+01,
                             -1.328068155288572e+01};
  static const double c[] = {-7.784894002430293e-03, -3.223964580411365e-01,
                             -2.400758277161838e+00, -2.549732539343734e+00,
                             4.374664141464968e+00,  2.938163982698783e+00};
  static const double d[] = {7.784695709041462e-03, 3.224671290700398e-01,
                             2.445134137142996e+00, 3.754408661907416e+00};
  const double plow = 0.02425;
  double q, r;
  if (p < plow) {
    q = std::sqrt(-2.0 * std::log(p));
    return (((((c[0] * q + c[1]) * q + c[2]) * q + c[3]) * q + c[4]) * q + c[5]) /
           ((((d[0] * q + d[1]) * q + d[2]) * q + d[3]) * q + 1.0);
  }
  if (p > 1.0 - plow) return -normal_quantile(1.0 - p);
  q = p - 0.5;
  r = q * q;
  return (((((a[0] * r + a[1]) * r + a[2]) * r + a[3]) * r + a[4]) * r + a[5]) * q /
         (((((b[0] * r + b[1]) * r + b[2]) * r + b[3]) * r + b[4]) * r + 1.0);
}

McEstimate block_mc(std::size_t samples, std::uint64_t seed, double confidence_level,
                    const std::function<double(std::mt19937_64&)>& per_sample) {
  const std::size_t blocks = (samples + kBlock - 1) / kBlock;
  std::vector<double> sums(blocks, 0.0), sumsqs(blocks, 0.0);
  support::parallel_for(blocks, [&](std::size_t bi) {
    auto rng = block_rng(seed, bi);
    const std::size_t lo = bi * kBlock;
    const std::size_t hi = std::min(samples, lo + kBlock);
    double s = 0.0, s2 = 0.0;
    for (std::size_t i = lo; i < hi; ++i) {
      const double v = per_sample(rng);
      s += v;
      s2 += v * v;
    }
    sums[bi] = s;
    sumsqs[bi] = s2;
  });
  double total = 0.0, total_sq = 0.0;
  for (std::size_t bi = 0; bi < blocks; ++bi) {  // fixed reduction order
    total += sums[bi];
    total_sq += sumsqs[bi];
  }
  McEstimate e;
  e.samples_used = samples;
  const double n = static_cast<double>(samples);
  e.mean = total / n;
  const double var = samples > 1 ? std::max(0.0, (total_sq - n * e.mean * e.mean) / (n - 1.0))
                                 : 0.0;
  e.std_error = std::sqrt(var / n);
  const double z = normal_quantile(0.5 * (1.0 + confidence_level));
  e.ci_low = e.mean - z * e.std_error;
  e.ci_high = e.mean + z * e.std_error;
  return e;
}

McEstimate estimate_aser(const LinkBudget& lb, const Modulation& mod, const McConfig& cfg) {
  cfg.validate();
  const SepEvaluator sep(mod, SepEvaluator::Tier::fast);
  return block_mc(cfg.samples, cfg.seed, cfg.confidence_level,
                  [&](std::mt19937_64& rng) { return sep(draw_end_to_end_one(lb, rng)); });
}

McEstimate estimate_cdf_point(const LinkBudget& lb, double gamma, const McConfig& cfg) {
  cfg.validate();
  if (!(gamma >= 0)) throw DomainError("estimate_cdf_point: gamma must be nonnegative");
  return block_mc(cfg.samples, cfg.seed, cfg.confidence_level, [&](std::mt19937_64& rng) {
    return draw_end_to_end_one(lb, rng) <= gamma ? 1.0 : 0.0;
  });
}

McEstimate estimate_aser_symbol_level(const LinkBudget& lb, const Modulation& mod,
                                      const McConfig& cfg) {
  cfg.validate();
  if (!mod.is_mpsk() || mod.order() > 4)
    throw ConfigError("symbol-level detector supports BPSK and QPSK only");
  const int order = mod.order();
  return block_mc(cfg.samples, cfg.seed, cfg.confidence_level, [&](std::mt19937_64& rng) {
    const double gamma = draw_end_to_end_one(lb, rng);
    std::normal_distribution<double> noise(0.0, 1.0);
    if (order == 2) {
      return noise(rng) > std::sqrt(2.0 * gamma) ? 1.0 : 0.0;
    }
    const double thr = std::sqrt(gamma);
    const bool e1 = noise(rng) > thr;
    const bool e2 = noise(rng) > thr;
    return (e1 || e2) ? 1.0 : 0.0;
  });
}

std::vector<double> draw_irradiance(const channel::MalagaParams& p, std::uint64_t seed,
                                    std::size_t count) {
  std::vector<double> out(count);
  const std::size_t blocks = (count + kBlock - 1) / kBlock;
  support::parallel_for(blocks, [&](std::size_t bi) {
    auto rng = block_rng(seed, bi);
    const std::size_t lo = bi * kBlock;
    const std::size_t hi = std::min(count, lo + kBlock);
    for (std::size_t i = lo; i < hi; ++i) out[i] = channel::sample_malaga_one(p, rng);
  });
  return out;
}

std::vector<double> draw_end_to_end_snr(const LinkBudget& lb, std::uint64_t seed,
                                        std::size_t count) {
  std::vector<double> out(count);
  const std::size_t blocks = (count + kBlock - 1) / kBlock;
  support::parallel_for(blocks, [&](std::size_t bi) {
    auto rng = block_rng(seed, bi);
    const std::size_t lo = bi * kBlock;
    const std::size_t hi = std::min(count, lo + kBlock);
    for (std::size_t i = lo; i < hi; ++i) out[i] = draw_end_to_end_one(lb, rng);
  });
  return out;
}

}  // namespace rfso::simulate
