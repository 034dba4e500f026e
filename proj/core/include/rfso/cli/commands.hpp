#pragma once

#include <iosfwd>
#include <string>

#include "rfso/cli/run_config.hpp"

namespace rfso::cli {

inline constexpr int kExitOk = 0;
inline constexpr int kExitNumerical = 1;
inline constexpr int kExitUsage = 2;

/// Sweeps the grid and writes the curve (CSV or JSON) to cfg.out_path
/// ("-" or empty = stdout). Per-point numerical failures become NaN cells
/// plus a warning and a nonzero exit.
int cmd_curve(const RunConfig& cfg, std::ostream& out, std::ostream& err);

struct GapOptions {
  std::string from = "bpsk";   // an MPSK scheme
  std::string to = "dpsk";     // dpsk, ncfsk, or another MPSK scheme
  std::string strategy = "both";  // fixed | channel_dependent | both
};
/// Prints asymptotic SNR gaps in dB (both Xi variants where applicable).
/// Uses cfg only to validate channel-dependent applicability.
int cmd_gap(const RunConfig& cfg, const GapOptions& opts, std::ostream& out,
            std::ostream& err);

struct DiversityOptions {
  double window_lo_db = 30.0;
  double window_hi_db = 40.0;
};
/// Computes closed-form curves per modulation and reports fitted log-log
/// slopes over the window.
int cmd_diversity(const RunConfig& cfg, const DiversityOptions& opts, std::ostream& out,
                  std::ostream& err);

struct ValidateOptions {
  bool force_fail = false;  // test hook: corrupts one tolerance
  std::string report_path;  // optional JSON report
};
/// Runs the triangulation suite (closed form vs quadrature vs MC, reduction
/// equivalences, normalization). Exit 0 iff all checks pass.
int cmd_validate(const RunConfig& cfg, const ValidateOptions& opts, std::ostream& out,
                 std::ostream& err);

struct SampleOptions {
  std::size_t count = 10;
  std::string kind = "irradiance";  // irradiance | snr
};
/// Writes deterministic raw draws, one per line, to cfg.out_path or stdout.
int cmd_sample(const RunConfig& cfg, const SampleOptions& opts, std::ostream& out,
               std::ostream& err);

}  // namespace rfso::cli
