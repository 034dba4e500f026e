#pragma once

#include <functional>

#include "rfso/analytics/link_budget.hpp"
#include "rfso/analytics/modulation.hpp"
#include "rfso/numerics/quadrature.hpp"

namespace rfso::analytics::quad_path {

/// Direct-quadrature duals of the closed forms. None of these touch Meijer-G
/// machinery: they integrate elementary conditional expressions against the
/// FSO SNR density, so they cross-validate the Mellin-Barnes path.

/// E[g(gamma2)] over the FSO SNR law, integrated in the variable
/// v = (gamma2/gamma_bar)^(1/4) where the density has an exponential tail.
double expect_over_fso(const channel::FsoSnrParams& fso,
                       const std::function<double(double)>& g,
                       const numerics::QuadratureSettings& settings = {});

/// MPSK ASER over a pure Rayleigh hop with mean SNR gamma_bar (closed form).
double rayleigh_mpsk_aser(double gamma_bar, const Modulation& mod);

double mgf(const LinkBudget& lb, double s, const numerics::QuadratureSettings& settings = {});
double cdf(const LinkBudget& lb, double gamma,
           const numerics::QuadratureSettings& settings = {});
double aser_mpsk(const LinkBudget& lb, const Modulation& mod,
                 const numerics::QuadratureSettings& settings = {});
double aser_mpsk_approx(const LinkBudget& lb, const Modulation& mod,
                        const numerics::QuadratureSettings& settings = {});
double aser_dpsk_ncfsk(const LinkBudget& lb, const Modulation& mod,
                       const numerics::QuadratureSettings& settings = {});

/// Fully nested 2-D expectation E[g(gamma1, gamma2)] (numeric inner integral
/// over the RF hop). Slow; used to validate the 1-D reductions above.
double expect_2d(const LinkBudget& lb, const std::function<double(double, double)>& g,
                 const numerics::QuadratureSettings& settings = {});

}  // namespace rfso::analytics::quad_path
