#pragma once

#include "rfso/channel/malaga.hpp"
#include "rfso/numerics/quadrature.hpp"

namespace rfso::channel {

/// FSO hop electrical SNR: gamma_2 = gamma_bar * I^2 with I Malaga-distributed.
/// gamma_bar is an independent linear-scale input; it is not recomputed from
/// the irradiance mean.
struct FsoSnrParams {
  MalagaParams malaga;
  double gamma_bar = 1.0;

  static FsoSnrParams create(MalagaParams malaga, double gamma_bar);
};

/// SNR PDF f(g) = (A/2) sum_k a_k g^{(alpha+k)/4-1} gamma_bar^{-(alpha+k)/4}
///               K_{alpha-k}(2 sqrt(Lambda sqrt(g/gamma_bar))).
double fso_snr_pdf(const FsoSnrParams& p, double gamma2);

enum class CdfMethod { closed_form, quadrature };

/// CDF of the FSO SNR: the closed form is the Meijer-G expression
/// (2^alpha/(8pi)) sum_k c_k 2^k Lambda^{-(alpha+k)/2}
///   G^{4,1}_{1,5}(Lambda^2 g /(16 gamma_bar) | 1; kappa2(k)),
/// the fallback integrates the PDF.
double fso_snr_cdf(const FsoSnrParams& p, double gamma,
                   CdfMethod method = CdfMethod::closed_form,
                   const numerics::QuadratureSettings& settings = {});

}  // namespace rfso::channel
