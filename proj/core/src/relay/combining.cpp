#include "rfso/relay/combining.hpp"

#include <algorithm>
#include <cmath>

#include "rfso/errors.hpp"

namespace rfso::relay {

RelayStrategy RelayStrategy::fixed_gain(double c) {
  if (!(c > 0)) throw DomainError("relay: fixed-gain constant C must be positive");
  return RelayStrategy{RelayKind::fixed_gain, c};
}

RelayStrategy RelayStrategy::channel_dependent() {
  return RelayStrategy{RelayKind::channel_dependent, 0.0};
}

double combine_fixed_gain(double gamma1, double gamma2, double c) {
  // written as gamma1 / (1 + C/gamma2) so the gamma2 -> 0 and -> inf limits
  // come out exact in IEEE arithmetic
  if (gamma1 == 0.0) return 0.0;
  return gamma1 / (1.0 + c / gamma2);
}

double combine_channel_dependent(double gamma1, double gamma2) {
  return gamma1 * gamma2 / (gamma1 + gamma2 + 1.0);
}

double combine_min_bound(double gamma1, double gamma2) {
  return std::min(gamma1, gamma2);
}

}  // namespace rfso::relay
