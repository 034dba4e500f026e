#include "rfso/asymptotics/diversity.hpp"

#include <cmath>
#include <vector>

#include "rfso/errors.hpp"

namespace rfso::asymptotics {

double diversity_order_fit(std::span<const double> snr_db, std::span<const double> aser,
                           double window_lo_db, double window_hi_db) {
  if (snr_db.size() != aser.size())
    throw DomainError("diversity_order_fit: mismatched input lengths");
  std::vector<double> x, y;
  for (std::size_t i = 0; i < snr_db.size(); ++i) {
    if (snr_db[i] < window_lo_db - 1e-9 || snr_db[i] > window_hi_db + 1e-9) continue;
    if (!(aser[i] > 0)) throw DomainError("diversity_order_fit: ASER values must be positive");
    x.push_back(snr_db[i] / 10.0);  // log10 of linear SNR
    y.push_back(std::log10(aser[i]));
  }
  if (x.size() < 2)
    throw DomainError("diversity_order_fit: window must contain at least two grid points");
  double sx = 0, sy = 0, sxx = 0, sxy = 0;
  const double n = static_cast<double>(x.size());
  for (std::size_t i = 0; i < x.size(); ++i) {
    sx += x[i];
    sy += y[i];
    sxx += x[i] * x[i];
    sxy += x[i] * y[i];
  }
  const double slope = (n * sxy - sx * sy) / (n * sxx - sx * sx);
  return -slope;
}

}  // namespace rfso::asymptotics
