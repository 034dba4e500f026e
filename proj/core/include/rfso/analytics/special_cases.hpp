#pragma once

#include "rfso/analytics/link_budget.hpp"
#include "rfso/analytics/modulation.hpp"
#include "rfso/numerics/quadrature.hpp"

namespace rfso::analytics {

/// Which reduced channel family a dedicated formula targets. The link budget
/// must actually carry the matching reduced parameters (K: rho = 0, Omega = 0;
/// Gamma-Gamma: xi = 0, Omega' = 1) or ConfigError is thrown. These dedicated
/// forms exist as cross-checks of the general Malaga formulas.
enum class SpecialKind { k_distribution, gamma_gamma };

double mgf_fixed_gain_special(SpecialKind kind, const LinkBudget& lb, double s,
                              const numerics::QuadratureSettings& settings = {});

double aser_dpsk_ncfsk_fixed_special(SpecialKind kind, const LinkBudget& lb,
                                     const Modulation& mod,
                                     const numerics::QuadratureSettings& settings = {});

double mgf_channel_dependent_special(SpecialKind kind, const LinkBudget& lb, double s,
                                     const numerics::QuadratureSettings& settings = {});

double aser_dpsk_ncfsk_channel_dependent_special(
    SpecialKind kind, const LinkBudget& lb, const Modulation& mod,
    const numerics::QuadratureSettings& settings = {});

}  // namespace rfso::analytics
