#pragma once

#include <memory>

#include "rfso/analytics/families.hpp"
#include "rfso/analytics/link_budget.hpp"
#include "rfso/analytics/modulation.hpp"

namespace rfso::analytics {

/// Closed-form end-to-end statistics of the fixed-gain relay link: CDF, MGF,
/// exact and three-point MPSK ASER, and the DPSK/NCFSK ASER. All Meijer-G
/// evaluations run over shared precomputed contours.
class FixedGainAnalytics {
 public:
  explicit FixedGainAnalytics(const LinkBudget& lb,
                              numerics::QuadratureSettings settings = {},
                              std::shared_ptr<const MalagaMeijerFamilies> families = nullptr);

  double cdf(double gamma) const;
  double mgf(double s) const;

  double aser_mpsk_exact(const Modulation& mod) const;
  double aser_mpsk_approx(const Modulation& mod) const;
  double aser_dpsk_ncfsk(const Modulation& mod) const;

  const LinkBudget& link_budget() const { return lb_; }

 private:
  double survival_sum_mgf(double z) const;  // sum_k K_k G51(z)
  LinkBudget lb_;
  numerics::QuadratureSettings settings_;
  std::shared_ptr<const MalagaMeijerFamilies> families_;
  std::vector<double> coeff_;  // K_k = c_k 2^{alpha+k} Lambda^{-(alpha+k)/2} / (8 pi)
};

/// Strategy-polymorphic front doors: dispatch on lb.strategy and evaluate the
/// matching closed form (the channel-dependent ones are min-bound based and
/// therefore ASER lower bounds).
double cdf_end_to_end(const LinkBudget& lb, double gamma);
double mgf_end_to_end(const LinkBudget& lb, double s);
double aser_mpsk_exact(const LinkBudget& lb, const Modulation& mod);
double aser_mpsk_approx(const LinkBudget& lb, const Modulation& mod);
double aser_dpsk_ncfsk(const LinkBudget& lb, const Modulation& mod);

}  // namespace rfso::analytics
