#include "rfso/numerics/bessel.hpp"

#include <cmath>
#include <limits>
#include <string>

#include "rfso/errors.hpp"

namespace rfso::numerics {

namespace {

constexpr double kEps = std::numeric_limits<double>::epsilon();
constexpr int kMaxIt = 20000;

// Taylor coefficients of 1/Gamma(1+t); odd entries feed the small-mu series
// of gamma1 below.
constexpr double kInvGammaCoeff[10] = {
    0.57721566490153286061,  -0.65587807152025388108, -0.04200263503409523553,
    0.16653861138229148950,  -0.04219773455554433675, -0.00962197152787697356,
    0.00721894324666309954,  -0.00116516759185906511, -0.00021524167411495097,
    0.00012805028238811619,
};

// gamma1 = [1/Gamma(1-mu) - 1/Gamma(1+mu)] / (2 mu), gamma2 = [... + ...] / 2,
// and the reciprocal gammas themselves, for |mu| <= 1/2.
void temme_gammas(double mu, double& gam1, double& gam2, double& gampl, double& gammi) {
  gampl = 1.0 / std::tgamma(1.0 + mu);
  gammi = 1.0 / std::tgamma(1.0 - mu);
  if (std::abs(mu) < 1e-2) {
    const double m2 = mu * mu;
    // odd part of 1/Gamma(1+t): c1 t + c3 t^3 + ...
    gam1 = -(kInvGammaCoeff[0] + m2 * (kInvGammaCoeff[2] +
             m2 * (kInvGammaCoeff[4] + m2 * (kInvGammaCoeff[6] + m2 * kInvGammaCoeff[8]))));
  } else {
    gam1 = (gammi - gampl) / (2.0 * mu);
  }
  gam2 = (gammi + gampl) / 2.0;
}

// Temme's series for K_mu(x) and K_{mu+1}(x), x <= 2, |mu| <= 1/2.
void k_series_small_x(double mu, double x, double& kmu, double& kmu1) {
  const double x2 = 0.5 * x;
  const double pimu = M_PI * mu;
  const double fact = (std::abs(pimu) < 1e-12) ? 1.0 : pimu / std::sin(pimu);
  double d = -std::log(x2);
  double e = mu * d;
  const double fact2 = (std::abs(e) < 1e-12) ? 1.0 : std::sinh(e) / e;
  double gam1, gam2, gampl, gammi;
  temme_gammas(mu, gam1, gam2, gampl, gammi);
  double ff = fact * (gam1 * std::cosh(e) + gam2 * fact2 * d);
  double sum = ff;
  e = std::exp(e);
  double p = 0.5 * e / gampl;
  double q = 0.5 / (e * gammi);
  double c = 1.0;
  d = x2 * x2;
  double sum1 = p;
  const double mu2 = mu * mu;
  int i = 1;
  for (; i <= kMaxIt; ++i) {
    ff = (i * ff + p + q) / (i * i - mu2);
    c *= d / i;
    p /= (i - mu);
    q /= (i + mu);
    const double del = c * ff;
    sum += del;
    const double del1 = c * (p - i * ff);
    sum1 += del1;
    if (std::abs(del) < std::abs(sum) * kEps) break;
  }
  if (i > kMaxIt) throw EvaluationError("bessel_k: series did not converge", sum, std::abs(c * ff));
  kmu = sum;
  kmu1 = sum1 * (2.0 / x);
}

// Steed/Thompson-Barnett continued fraction CF2 for x > 2, |mu| <= 1/2.
void k_cf2_large_x(double mu, double x, double& kmu, double& kmu1) {
  const double mu2 = mu * mu;
  double b = 2.0 * (1.0 + x);
  double d = 1.0 / b;
  double h = d, delh = d;
  double q1 = 0.0, q2 = 1.0;
  const double a1 = 0.25 - mu2;
  double q = a1, c = a1, a = -a1;
  double s = 1.0 + q * delh;
  int i = 2;
  for (; i <= kMaxIt; ++i) {
    a -= 2 * (i - 1);
    c = -a * c / i;
    const double qnew = (q1 - b * q2) / a;
    q1 = q2;
    q2 = qnew;
    q += c * qnew;
    b += 2.0;
    d = 1.0 / (b + a * d);
    delh = (b * d - 1.0) * delh;
    h += delh;
    const double dels = q * delh;
    s += dels;
    if (std::abs(dels / s) <= kEps) break;
  }
  if (i > kMaxIt) throw EvaluationError("bessel_k: continued fraction did not converge", 0.0, 1.0);
  h = a1 * h;
  kmu = std::sqrt(M_PI / (2.0 * x)) * std::exp(-x) / s;
  kmu1 = kmu * (mu + x + 0.5 - h) / x;
}

}  // namespace

double bessel_k(double nu, double x) {
  if (!(x > 0.0)) throw DomainError("bessel_k: x must be positive");
  nu = std::abs(nu);  // K_{-nu} = K_nu
  const int nl = static_cast<int>(nu + 0.5);
  const double mu = nu - nl;  // in [-1/2, 1/2]
  double kmu, kmu1;
  if (x <= 2.0) {
    k_series_small_x(mu, x, kmu, kmu1);
  } else {
    k_cf2_large_x(mu, x, kmu, kmu1);
  }
  constexpr double kBig = 0.5 * std::numeric_limits<double>::max();
  for (int i = 1; i <= nl; ++i) {
    const double knext = 2.0 * (mu + i) / x * kmu1 + kmu;
    kmu = kmu1;
    kmu1 = knext;
    if (kmu1 > kBig && i < nl) {
      throw RangeError("bessel_k: overflow at nu=" + std::to_string(nu) +
                       ", x=" + std::to_string(x));
    }
  }
  if (!std::isfinite(kmu)) {
    throw RangeError("bessel_k: overflow at nu=" + std::to_string(nu) +
                     ", x=" + std::to_string(x));
  }
  return kmu;
}

}  // namespace rfso::numerics
