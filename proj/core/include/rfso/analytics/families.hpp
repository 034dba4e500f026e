#pragma once

#include <memory>
#include <vector>

#include "rfso/channel/malaga.hpp"
#include "rfso/numerics/meijer.hpp"

namespace rfso::analytics {

/// Precomputed Mellin-Barnes contours for the four Meijer-G shapes used by
/// the end-to-end statistics. The parameter lists depend only on (alpha, k),
/// so one set serves every SNR point, relay constant, and modulation of a
/// sweep. Component k entries are null when the mixture coefficient c_k is 0.
class MalagaMeijerFamilies {
 public:
  static std::shared_ptr<const MalagaMeijerFamilies> build(
      const channel::MalagaParams& params, const numerics::QuadratureSettings& settings = {});

  // G^{5,1}_{1,5}(z | 0; kappa2(k)) - fixed-gain MGF / DPSK ASER
  const numerics::MeijerGContour& fixed_mgf(int k) const { return *fixed_mgf_[k - 1]; }
  // G^{5,0}_{0,5}(z | -; kappa2(k)) - fixed-gain CDF
  const numerics::MeijerGContour& fixed_cdf(int k) const { return *fixed_cdf_[k - 1]; }
  // G^{4,1}_{1,5}(z | 1; kappa2(k)) - FSO SNR CDF term of the min bound
  const numerics::MeijerGContour& cd_cdf(int k) const { return *cd_cdf_[k - 1]; }
  // G^{4,1}_{1,4}(z | 1; kappa3(k)) - channel-dependent MGF / DPSK ASER
  const numerics::MeijerGContour& cd_mgf(int k) const { return *cd_mgf_[k - 1]; }

 private:
  std::vector<std::unique_ptr<numerics::MeijerGContour>> fixed_mgf_, fixed_cdf_, cd_cdf_,
      cd_mgf_;
};

}  // namespace rfso::analytics
