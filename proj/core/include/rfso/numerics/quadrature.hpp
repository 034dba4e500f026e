#pragma once

#include <functional>

namespace rfso::numerics {

struct QuadratureSettings {
  double abs_tol = 1e-12;
  double rel_tol = 1e-9;
  int max_subdivisions = 2000;
};

/// Adaptive Gauss-Kronrod (7-15) on [a, b]. Endpoints are never evaluated, so
/// integrable endpoint singularities are tolerated. Throws EvaluationError
/// (carrying the best estimate and error bound) when the subdivision budget
/// is exhausted before reaching max(abs_tol, rel_tol * |I|).
double integrate_finite(const std::function<double(double)>& f, double a, double b,
                        const QuadratureSettings& settings = {});

/// Adaptive integral of f over [a, inf) via the rational map x = a + t/(1-t).
double integrate_semi_infinite(const std::function<double(double)>& f, double a,
                               const QuadratureSettings& settings = {});

}  // namespace rfso::numerics
