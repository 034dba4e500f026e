#pragma once

#include <memory>

#include "rfso/analytics/families.hpp"
#include "rfso/analytics/link_budget.hpp"
#include "rfso/analytics/modulation.hpp"

namespace rfso::analytics {

/// Closed-form statistics of the channel-dependent relay link under the
/// min{gamma1, gamma2} approximation. The CDF/MGF are exact for the min; the
/// resulting ASERs are lower bounds on the true channel-dependent ASER.
class ChannelDependentAnalytics {
 public:
  explicit ChannelDependentAnalytics(
      const LinkBudget& lb, numerics::QuadratureSettings settings = {},
      std::shared_ptr<const MalagaMeijerFamilies> families = nullptr);

  double fso_cdf(double gamma) const;  // F2 via the G^{4,1}_{1,5} family
  double cdf(double gamma) const;      // F1 + F2 - F1*F2 in Meijer-G form
  double mgf(double s) const;          // reduced G^{4,1}_{1,4} form
  /// Pre-reduction G^{4,2}_{2,5} form of the MGF (slower; consistency check).
  double mgf_intermediate_form(double s) const;

  double aser_mpsk_exact(const Modulation& mod) const;
  double aser_mpsk_approx(const Modulation& mod) const;
  double aser_dpsk_ncfsk(const Modulation& mod) const;

  const LinkBudget& link_budget() const { return lb_; }

 private:
  double survival_sum_mgf(double z) const;
  LinkBudget lb_;
  numerics::QuadratureSettings settings_;
  std::shared_ptr<const MalagaMeijerFamilies> families_;
  std::vector<double> coeff_;  // K_k, as in the fixed-gain case
};

}  // namespace rfso::analytics
