#pragma once

#include <string>
#include <vector>

#include "rfso/analytics/link_budget.hpp"
#include "rfso/analytics/modulation.hpp"

namespace rfso::asymptotics {

using analytics::LinkBudget;
using analytics::Modulation;

/// Two flavors of the MPSK high-SNR constant Xi. The exact one integrates
/// sin^2(theta)/n^2 over [0, Theta]; the approx one applies the three-point
/// weights to 1/(Gamma1 s). The printed SNR-gap constants (24/13, 44/13) are
/// only consistent with the approx variant, so that is the default.
enum class XiVariant { exact, approx };

double xi_exact(const Modulation& mpsk);
double xi_approx(const Modulation& mpsk);

/// Fixed-gain high-SNR ASER: Xi/Gamma1 for MPSK, m/(2 Gamma1) for DPSK/NCFSK.
/// Independent of every FSO parameter.
double aser_asymptotic_fixed(const Modulation& mod, double gamma_bar_1,
                             XiVariant variant = XiVariant::approx);

/// B_k = (A/4) a_k Lambda^{(k-alpha)/2} Gamma(k/2) Gamma(alpha-k), k = 1..beta.
/// Requires alpha > beta; refuses the Gamma-Gamma case with beta > 1, where
/// the half-order expansion does not converge.
std::vector<double> bk_coefficients(const channel::MalagaParams& p);

/// D_M = (8M + 3 sqrt(3) M + (6M-12) sqrt(s1) - 12) / (24 M sqrt(s1)).
double d_constant(const Modulation& mpsk);

/// Channel-dependent high-SNR ASER: B1 D_M Gamma2^{-1/2} for MPSK,
/// (B1 sqrt(m)/2) Gamma2^{-1/2} for DPSK/NCFSK. Depends on the turbulence
/// condition through B1; same restrictions as bk_coefficients.
double aser_asymptotic_channel_dependent(const Modulation& mod,
                                         const channel::MalagaParams& p,
                                         double gamma_bar_2);

/// Extra SNR (dB) DPSK/NCFSK needs relative to MPSK at equal asymptotic ASER
/// in the fixed-gain system: 10 log10(m / (2 Xi)).
double snr_gap_fixed(const Modulation& mpsk, int m, XiVariant variant = XiVariant::approx);

/// Gap between two MPSK orders with the same machinery: 10 log10(Xi_b / Xi_a).
double snr_gap_fixed_mpsk(const Modulation& mod_a, const Modulation& mod_b,
                          XiVariant variant = XiVariant::approx);

/// Channel-dependent gap, sign fixed so DPSK/NCFSK needing more SNR is
/// positive: 10 log10(m / (4 D_M^2)).
double snr_gap_channel_dependent(const Modulation& mpsk, int m);

struct AsymptoticReport {
  double leading_coefficient = 0.0;  // multiplies Gamma^{-diversity_order}
  double diversity_order = 0.0;
  std::string validity_note;
};

AsymptoticReport asymptotic_report(const LinkBudget& lb, const Modulation& mod,
                                   XiVariant variant = XiVariant::approx);

}  // namespace rfso::asymptotics
