#include "rfso/analytics/modulation.hpp"

#include <cmath>

#include "rfso/errors.hpp"

namespace rfso::analytics {

Modulation Modulation::mpsk(int order) {
  if (order < 2) throw DomainError("modulation: MPSK order must be >= 2");
  return Modulation(ModKind::mpsk, order);
}

Modulation Modulation::dpsk() { return Modulation(ModKind::dpsk, 1); }
Modulation Modulation::ncfsk() { return Modulation(ModKind::ncfsk, 2); }

std::optional<Modulation> Modulation::parse(std::string_view name) {
  if (name == "bpsk") return mpsk(2);
  if (name == "qpsk") return mpsk(4);
  if (name == "dpsk") return dpsk();
  if (name == "ncfsk") return ncfsk();
  const auto pos = name.find("psk");
  if (pos != std::string_view::npos && pos > 0 && pos + 3 == name.size()) {
    int order = 0;
    for (char ch : name.substr(0, pos)) {
      if (ch < '0' || ch > '9') return std::nullopt;
      order = order * 10 + (ch - '0');
    }
    if (order >= 2) return mpsk(order);
  }
  return std::nullopt;
}

int Modulation::order() const {
  if (kind_ != ModKind::mpsk) throw DomainError("modulation: order() is MPSK-only");
  return value_;
}

int Modulation::m() const {
  if (kind_ == ModKind::mpsk) throw DomainError("modulation: m() is DPSK/NCFSK-only");
  return value_;
}

double Modulation::theta() const {
  const int M = order();
  return (M - 1) * M_PI / M;
}

double Modulation::n() const { return std::sin(M_PI / order()); }

std::array<double, 3> Modulation::s() const {
  const double s1 = n() * n();
  return {s1, 4.0 * s1 / 3.0, 1.0};
}

std::array<double, 3> Modulation::weights() const {
  const double M = order();
  return {(M - 1.0) / (2.0 * M) - 1.0 / 6.0, 0.25, (M - 1.0) / (2.0 * M) - 0.25};
}

std::string Modulation::name() const {
  switch (kind_) {
    case ModKind::dpsk:
      return "dpsk";
    case ModKind::ncfsk:
      return "ncfsk";
    case ModKind::mpsk:
      if (value_ == 2) return "bpsk";
      if (value_ == 4) return "qpsk";
      return std::to_string(value_) + "psk";
  }
  return "unknown";
}

}  // namespace rfso::analytics
