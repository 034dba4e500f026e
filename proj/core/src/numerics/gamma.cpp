#include "rfso/numerics/gamma.hpp"

#include <cmath>
#include <limits>

#include "rfso/errors.hpp"

namespace rfso::numerics {

namespace {

constexpr double kLanczosG = 7.0;
constexpr double kLanczos[9] = {
    0.99999999999980993,
    676.5203681218851,
    -1259.1392167224028,
    771.32342877765313,
    -176.61502916214059,
    12.507343278686905,
    -0.13857109526572012,
    9.9843695780195716e-6,
    1.5056327351493116e-7,
};
constexpr double kLogTwoPi = 1.8378770664093454836;
constexpr double kLogPi = 1.1447298858494001741;

// lngamma for Re z >= 0.5 by the Lanczos sum.
std::complex<double> lanczos(std::complex<double> z) {
  z -= 1.0;
  std::complex<double> x = kLanczos[0];
  for (int i = 1; i < 9; ++i) x += kLanczos[i] / (z + static_cast<double>(i));
  std::complex<double> t = z + kLanczosG + 0.5;
  return 0.5 * kLogTwoPi + (z + 0.5) * std::log(t) - t + std::log(x);
}

// ln sin(pi z), stable for large |Im z|. Branch offsets of 2*pi*i are
// tolerated (the value is only ever exponentiated downstream).
std::complex<double> log_sin_pi(std::complex<double> z) {
  const double n = std::round(z.real());
  std::complex<double> w = z - n;
  std::complex<double> shift(0.0, 0.0);
  if (std::fmod(std::abs(n), 2.0) == 1.0) shift = std::complex<double>(0.0, M_PI);
  const double y = w.imag();
  if (std::abs(y) < 20.0) return std::log(std::sin(M_PI * w)) + shift;
  // |Im w| >= 20: sin(pi w) ~ (i/2) e^{-i pi w} for y > 0 (mirrored for y < 0),
  // the discarded factor is 1 + O(e^{-2 pi |y|}) < 1 + 1e-54.
  const std::complex<double> i_pi_w(-M_PI * w.imag(), M_PI * w.real());
  if (y > 0) return -i_pi_w + std::complex<double>(-M_LN2, M_PI / 2.0) + shift;
  return i_pi_w + std::complex<double>(-M_LN2, -M_PI / 2.0) + shift;
}

}  // namespace

double log_gamma(double x) {
  if (!(x > 0.0)) throw DomainError("log_gamma: argument must be positive");
  int sign = 0;
  return ::lgamma_r(x, &sign);
}

double gamma_fn(double x) {
  if (!(x > 0.0)) throw DomainError("gamma_fn: argument must be positive");
  const double v = std::tgamma(x);
  if (!std::isfinite(v)) throw RangeError("gamma_fn: overflow");
  return v;
}

double binomial(unsigned n, unsigned k) {
  if (k > n) return 0.0;
  if (k > n - k) k = n - k;
  double c = 1.0;
  for (unsigned i = 1; i <= k; ++i) c = c * static_cast<double>(n - k + i) / i;
  return c;
}

std::complex<double> log_gamma(std::complex<double> z) {
  if (z.real() >= 0.5) return lanczos(z);
  if (z.imag() == 0.0 && z.real() == std::floor(z.real()))
    throw DomainError("log_gamma: pole at non-positive integer");
  return kLogPi - log_sin_pi(z) - lanczos(1.0 - z);
}

}  // namespace rfso::numerics
