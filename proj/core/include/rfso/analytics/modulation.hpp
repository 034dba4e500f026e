#pragma once

#include <array>
#include <optional>
#include <string>
#include <string_view>

namespace rfso::analytics {

enum class ModKind { mpsk, dpsk, ncfsk };

/// Modulation scheme: MPSK carries the order M and the angular-integral
/// constants Theta = (M-1)pi/M, n = sin(pi/M) and the three-point MGF
/// abscissas s1 = n^2, s2 = 4 s1/3, s3 = 1. DPSK and NCFSK carry
/// m = 1 and m = 2 for the conditional SEP (1/2) exp(-gamma/m).
class Modulation {
 public:
  static Modulation mpsk(int order);
  static Modulation dpsk();
  static Modulation ncfsk();
  static std::optional<Modulation> parse(std::string_view name);

  ModKind kind() const { return kind_; }
  bool is_mpsk() const { return kind_ == ModKind::mpsk; }

  int order() const;                    // MPSK only
  int m() const;                        // DPSK/NCFSK only
  double theta() const;                 // (M-1) pi / M
  double n() const;                     // sin(pi/M)
  std::array<double, 3> s() const;      // {s1, s2, s3}
  std::array<double, 3> weights() const;  // three-point approximation weights

  std::string name() const;  // "bpsk", "qpsk", "8psk", ..., "dpsk", "ncfsk"

 private:
  Modulation(ModKind kind, int order_or_m) : kind_(kind), value_(order_or_m) {}
  ModKind kind_;
  int value_;
};

}  // namespace rfso::analytics
