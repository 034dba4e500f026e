#pragma once

namespace rfso::numerics {

/// Modified Bessel function of the second kind K_nu(x) for real order nu and
/// x > 0. Symmetric in nu. Throws DomainError for x <= 0 and RangeError when
/// the result overflows double precision (tiny x with large |nu|).
double bessel_k(double nu, double x);

}  // namespace rfso::numerics
