#include "rfso/simulate/sep.hpp"

#include <cmath>

#include "rfso/errors.hpp"

namespace rfso::simulate {

namespace {

// Gauss-Legendre nodes (positive half) and weights on [-1, 1]
struct GlRule {
  const double* x;
  const double* w;
  int half;  // number of node pairs; odd rules also use the center node
  bool has_center;
};

constexpr double kGl12X[6] = {0.1252334085114689, 0.3678314989981802, 0.5873179542866175,
                              0.7699026741943047, 0.9041172563704749, 0.9815606342467192};
constexpr double kGl12W[6] = {0.2491470458134028, 0.2334925365383548, 0.2031674267230659,
                              0.1600783285433462, 0.1069393259953184, 0.0471753363865118};
constexpr double kGl14X[7] = {0.1080549487073437, 0.3191123689278897, 0.5152486363581541,
                              0.6872929048116855, 0.8272013150697650, 0.9284348836635735,
                              0.9862838086968123};
constexpr double kGl14W[7] = {0.2152638534631578, 0.2051984637212956, 0.1855383974779378,
                              0.1572031671581935, 0.1215185706879032, 0.0801580871597602,
                              0.0351194603317519};

// dyadic panel edges: refined toward 0 (small-gamma boundary layer) and
// toward Theta (large-gamma peak)
std::vector<double> panel_edges(double theta, int low_levels, int peak_levels) {
  std::vector<double> edges{0.0};
  for (int i = low_levels; i >= 1; --i) edges.push_back(theta * std::ldexp(1.0, -i));
  for (int i = 1; i + 1 <= peak_levels; ++i)
    edges.push_back(theta * (1.0 - std::ldexp(1.0, -(i + 1))));
  edges.push_back(theta);
  return edges;
}

}  // namespace

SepEvaluator::SepEvaluator(const Modulation& mod, Tier tier) : mod_(mod) {
  if (!mod_.is_mpsk() || mod_.order() <= 4) return;  // closed forms, no nodes
  const double theta = mod_.theta();
  const double n2 = mod_.n() * mod_.n();
  const int low = tier == Tier::fast ? 8 : 12;
  const int peak = tier == Tier::fast ? 3 : 5;
  const GlRule rule = tier == Tier::fast ? GlRule{kGl12X, kGl12W, 6, false}
                                         : GlRule{kGl14X, kGl14W, 7, false};
  const auto edges = panel_edges(theta, low, peak);
  for (std::size_t e = 0; e + 1 < edges.size(); ++e) {
    const double c = 0.5 * (edges[e] + edges[e + 1]);
    const double h = 0.5 * (edges[e + 1] - edges[e]);
    for (int j = 0; j < rule.half; ++j) {
      for (double sgn : {-1.0, 1.0}) {
        const double t = c + sgn * h * rule.x[j];
        const double st = std::sin(t);
        coeff_.push_back(n2 / (st * st));
        weight_.push_back(h * rule.w[j] / M_PI);
      }
    }
  }
}

double SepEvaluator::operator()(double gamma) const {
  if (!(gamma >= 0)) throw DomainError("conditional_sep: gamma must be nonnegative");
  switch (mod_.kind()) {
    case analytics::ModKind::dpsk:
    case analytics::ModKind::ncfsk:
      return 0.5 * std::exp(-gamma / mod_.m());
    case analytics::ModKind::mpsk:
      break;
  }
  const int M = mod_.order();
  if (M == 2) return 0.5 * std::erfc(std::sqrt(gamma));
  if (M == 4) {
    const double q = 0.5 * std::erfc(std::sqrt(0.5 * gamma));
    return 2.0 * q - q * q;
  }
  double sum = 0.0;
  for (std::size_t j = 0; j < coeff_.size(); ++j) {
    const double e = gamma * coeff_[j];
    if (e < 745.0) sum += weight_[j] * std::exp(-e);
  }
  return sum;
}

double conditional_sep(const Modulation& mod, double gamma) {
  return SepEvaluator(mod, SepEvaluator::Tier::precise)(gamma);
}

}  // namespace rfso::simulate
