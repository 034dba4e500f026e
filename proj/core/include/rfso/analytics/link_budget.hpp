#pragma once

#include "rfso/channel/fso_snr.hpp"
#include "rfso/channel/rayleigh.hpp"
#include "rfso/relay/combining.hpp"

namespace rfso::analytics {

/// Everything needed to evaluate the end-to-end link: RF hop, FSO hop, and
/// the relaying strategy.
struct LinkBudget {
  channel::RayleighParams rf;
  channel::FsoSnrParams fso;
  relay::RelayStrategy strategy;
};

}  // namespace rfso::analytics
