#pragma once

#include <complex>
#include <cstddef>
#include <vector>

#include "rfso/numerics/quadrature.hpp"

namespace rfso::numerics {

/// Evaluation request for G^{m,n}_{p,q}(z | a; b) with real parameters and
/// positive real argument. m counts the Gamma(b_j - s) factors in the
/// numerator, n the Gamma(1 - a_j + s) factors.
struct MeijerGSpec {
  int m = 0;
  int n = 0;
  std::vector<double> a;  // upper parameters, length p
  std::vector<double> b;  // lower parameters, length q
  double z = 1.0;

  int p() const { return static_cast<int>(a.size()); }
  int q() const { return static_cast<int>(b.size()); }
  void validate() const;  // throws DomainError on invariant violation
};

struct ContourOptions {
  /// Shift of the integration abscissa away from the automatic choice. The
  /// shifted contour must still separate the two pole families.
  double sigma_shift = 0.0;
  /// >1 refines the node spacing beyond the accuracy model's choice.
  double resolution_scale = 1.0;
  /// Largest |ln z| the precomputed node grid must support. Evaluations
  /// beyond it lose accuracy and are rejected by the built-in error check.
  double log_arg_span = 60.0;
  /// Representative argument used to condition the abscissa choice when a
  /// pole family leaves sigma unbounded on one side (0 = use z at call time).
  double z_hint = 0.0;
};

/// Reusable Mellin-Barnes contour for a fixed parameter set (m, n, a, b):
/// gamma products are precomputed on the contour nodes once, so evaluating
/// many arguments z costs one complex rotation sum each. Evaluation carries a
/// built-in step-halving error check and throws EvaluationError when the
/// estimate misses the requested tolerance.
class MeijerGContour {
 public:
  MeijerGContour(int m, int n, std::vector<double> a, std::vector<double> b,
                 QuadratureSettings settings = {}, ContourOptions options = {});

  double operator()(double z) const;

  double sigma() const { return sigma_; }
  double step() const { return step_; }
  std::size_t node_count() const { return nodes_.size(); }

 private:
  void build(double step);
  void build_series_plan();
  int m_, n_;
  std::vector<double> a_, b_;
  QuadratureSettings settings_;
  ContourOptions options_;
  double sigma_ = 0.0;
  double step_ = 0.0;
  double log_scale_ = 0.0;     // max Re ln(gamma ratio) over the nodes
  double envelope_sum_ = 0.0;  // sum of scaled node magnitudes (roundoff floor)
  std::vector<std::complex<double>> nodes_;  // exp(ln ratio - log_scale) at t = i*step
  // ascending residue series for small arguments, where the vertical contour
  // loses digits to cancellation: usable simple-pole levels below the first
  // coincident level, plus the truncation-bound data
  struct SeriesTerm {
    double exponent;
    double coeff;
  };
  std::vector<SeriesTerm> series_;  // sorted by ascending exponent
  double series_stop_ = 0.0;        // exponent of the first omitted level
  double series_cmax_ = 0.0;
};

/// One-shot evaluation of a Meijer G-function by Mellin-Barnes contour
/// integration. Retries at finer resolution internally before giving up.
double meijer_g(const MeijerGSpec& spec, const QuadratureSettings& settings = {},
                const ContourOptions& options = {});

}  // namespace rfso::numerics
