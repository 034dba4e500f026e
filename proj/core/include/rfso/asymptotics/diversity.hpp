#pragma once

#include <span>

namespace rfso::asymptotics {

/// Least-squares slope of log10(ASER) versus log10(SNR) over the points whose
/// snr_db lies in [window_lo_db, window_hi_db], negated so a diversity-1 curve
/// fits to +1. Requires >= 2 points in the window and positive ASER values.
double diversity_order_fit(std::span<const double> snr_db, std::span<const double> aser,
                           double window_lo_db, double window_hi_db);

}  // namespace rfso::asymptotics
