#pragma once

#include <iosfwd>
#include <string>
#include <vector>

#include "rfso/cli/run_config.hpp"

namespace rfso::cli {

/// One computed sweep: the SNR grid plus one value column per requested
/// (modulation, method) pair, with trailing Monte Carlo CI columns. Column
/// order is deterministic: modulations in config order, methods in canonical
/// order (exact, approx, asymptotic, mc), CI columns last.
struct AserCurve {
  struct Column {
    std::string name;
    std::vector<double> values;
  };
  std::vector<double> snr_db;
  std::vector<Column> columns;
  std::string config_echo;     // canonical config JSON
  std::uint64_t seed = 0;
  std::string phase_note;
  std::string version;
  std::string timestamp;       // empty when suppressed
  bool failed_points = false;  // any NaN cell

  void write_csv(std::ostream& os) const;
  void write_json(std::ostream& os) const;
};

/// Evaluates every requested column over the grid. Numerical failures at a
/// point produce NaN cells (and set failed_points) instead of aborting the
/// sweep. Throws ConfigError for request-level inconsistencies (e.g. the
/// channel-dependent asymptote of a Gamma-Gamma channel).
AserCurve compute_curve(const RunConfig& cfg, std::ostream& warnings);

}  // namespace rfso::cli
