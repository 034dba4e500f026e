#pragma once

namespace rfso::relay {

enum class RelayKind { fixed_gain, channel_dependent };

/// Amplify-and-forward relaying strategy. Fixed gain holds the amplifier
/// constant (parameter C > 0); channel-dependent tracks the first-hop fading
/// to keep the relay output power constant.
struct RelayStrategy {
  RelayKind kind = RelayKind::fixed_gain;
  double c = 0.5;  // fixed-gain constant; ignored for channel_dependent

  static RelayStrategy fixed_gain(double c);
  static RelayStrategy channel_dependent();
};

/// End-to-end SNR of the fixed-gain relay: gamma1*gamma2/(gamma2 + C).
double combine_fixed_gain(double gamma1, double gamma2, double c);

/// End-to-end SNR of the channel-dependent relay: gamma1*gamma2/(gamma1+gamma2+1).
double combine_channel_dependent(double gamma1, double gamma2);

/// min(gamma1, gamma2): upper bound on the channel-dependent SNR, hence the
/// analytic channel-dependent ASER built on it is a lower bound.
double combine_min_bound(double gamma1, double gamma2);

}  // namespace rfso::relay
