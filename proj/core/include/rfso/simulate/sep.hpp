#pragma once

#include <vector>

#include "rfso/analytics/modulation.hpp"

namespace rfso::simulate {

using analytics::Modulation;

/// Exact conditional symbol error probability at instantaneous SNR gamma.
/// BPSK and QPSK use erfc closed forms; DPSK/NCFSK use (1/2) exp(-gamma/m);
/// higher PSK orders evaluate the angular integral on a fixed composite
/// Gauss-Legendre rule. `Tier::fast` trims the rule for Monte Carlo loops
/// (absolute error < 1e-7); `Tier::precise` keeps it below 1e-12.
class SepEvaluator {
 public:
  enum class Tier { fast, precise };
  explicit SepEvaluator(const Modulation& mod, Tier tier = Tier::precise);

  double operator()(double gamma) const;

 private:
  Modulation mod_;
  std::vector<double> coeff_;   // n^2 / sin^2(theta_j)
  std::vector<double> weight_;  // GL weights / pi
};

/// Convenience wrapper (constructs a precise evaluator per call).
double conditional_sep(const Modulation& mod, double gamma);

}  // namespace rfso::simulate
