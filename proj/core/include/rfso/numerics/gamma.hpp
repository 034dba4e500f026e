#pragma once

#include <complex>

namespace rfso::numerics {

/// ln Gamma(x) for x > 0. Throws DomainError for x <= 0.
double log_gamma(double x);

/// Gamma(x) for x > 0. Throws RangeError on overflow (x > ~171.6).
double gamma_fn(double x);

/// Binomial coefficient C(n, k), exact in double up to 2^53.
double binomial(unsigned n, unsigned k);

/// Principal branch of ln Gamma(z) away from the poles (Lanczos, with the
/// reflection formula for Re z < 0.5). The imaginary part may differ from the
/// analytically-continued branch by a multiple of 2*pi; callers that only
/// exponentiate the result are unaffected.
std::complex<double> log_gamma(std::complex<double> z);

}  // namespace rfso::numerics
