#include "rfso/analytics/families.hpp"

namespace rfso::analytics {

std::shared_ptr<const MalagaMeijerFamilies> MalagaMeijerFamilies::build(
    const channel::MalagaParams& params, const numerics::QuadratureSettings& settings) {
  auto fam = std::make_shared<MalagaMeijerFamilies>();
  const double alpha = params.alpha();
  const int beta = params.beta();
  fam->fixed_mgf_.resize(beta);
  fam->fixed_cdf_.resize(beta);
  fam->cd_cdf_.resize(beta);
  fam->cd_mgf_.resize(beta);
  numerics::ContourOptions opts;
  opts.log_arg_span = 120.0;  // covers arguments from ~1e-52 up to ~1e52
  for (int k = 1; k <= beta; ++k) {
    if (params.mixture_coeff()[k - 1] == 0.0) continue;
    const std::vector<double> kappa2 = {0.5 * alpha, 0.5 * (alpha + 1.0), 0.5 * k,
                                        0.5 * (k + 1.0), 0.0};
    const std::vector<double> kappa3 = {0.5 * alpha, 0.5 * (alpha + 1.0), 0.5 * k,
                                        0.5 * (k + 1.0)};
    fam->fixed_mgf_[k - 1] = std::make_unique<numerics::MeijerGContour>(
        5, 1, std::vector<double>{0.0}, kappa2, settings, opts);
    fam->fixed_cdf_[k - 1] = std::make_unique<numerics::MeijerGContour>(
        5, 0, std::vector<double>{}, kappa2, settings, opts);
    fam->cd_cdf_[k - 1] = std::make_unique<numerics::MeijerGContour>(
        4, 1, std::vector<double>{1.0}, kappa2, settings, opts);
    fam->cd_mgf_[k - 1] = std::make_unique<numerics::MeijerGContour>(
        4, 1, std::vector<double>{1.0}, kappa3, settings, opts);
  }
  return fam;
}

}  // namespace rfso::analytics
