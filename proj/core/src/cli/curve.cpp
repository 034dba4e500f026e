#include "rfso/cli/curve.hpp"

#include <algorithm>
#include <chrono>
#include <cmath>
#include <cstdio>
#include <ctime>
#include <limits>
#include <memory>
#include <mutex>
#include <ostream>

#include <json.hpp>

#include "rfso/analytics/channel_dependent.hpp"
#include "rfso/analytics/families.hpp"
#include "rfso/analytics/fixed_gain.hpp"
#include "rfso/asymptotics/high_snr.hpp"
#include "rfso/errors.hpp"
#include "rfso/support/parallel.hpp"
#include "rfso/version.hpp"

namespace rfso::cli {

namespace {

constexpr double kNaN = std::numeric_limits<double>::quiet_NaN();

std::string format_double(double v) {
  char buf[40];
  std::snprintf(buf, sizeof(buf), "%.17g", v);
  return buf;
}

bool method_applies(Method m, const analytics::Modulation& mod) {
  if (m == Method::approx) return mod.is_mpsk();
  return true;
}

std::string utc_now() {
  const auto now = std::chrono::system_clock::now();
  const std::time_t t = std::chrono::system_clock::to_time_t(now);
  char buf[32];
  std::tm tm_utc;
  gmtime_r(&t, &tm_utc);
  std::strftime(buf, sizeof(buf), "%Y-%m-%dT%H:%M:%SZ", &tm_utc);
  return buf;
}

}  // namespace

void AserCurve::write_csv(std::ostream& os) const {
  os << "# rfso curve v" << version << "\n";
  os << "# config: " << config_echo << "\n";
  os << "# seed: " << seed << "\n";
  if (!phase_note.empty()) os << "# phase_diff: " << phase_note << "\n";
  if (!timestamp.empty()) os << "# generated: " << timestamp << "\n";
  os << "snr_db";
  for (const auto& c : columns) os << ',' << c.name;
  os << "\n";
  for (std::size_t i = 0; i < snr_db.size(); ++i) {
    os << format_double(snr_db[i]);
    for (const auto& c : columns) os << ',' << format_double(c.values[i]);
    os << "\n";
  }
}

void AserCurve::write_json(std::ostream& os) const {
  nlohmann::json meta;
  meta["tool"] = "rfso";
  meta["version"] = version;
  meta["config"] = nlohmann::json::parse(config_echo);
  meta["seed"] = seed;
  if (!phase_note.empty()) meta["phase_diff_note"] = phase_note;
  if (!timestamp.empty()) meta["generated"] = timestamp;
  nlohmann::json series = nlohmann::json::object();
  for (const auto& c : columns) {
    nlohmann::json arr = nlohmann::json::array();
    for (double v : c.values) {
      if (std::isnan(v)) {
        arr.push_back(nullptr);
      } else {
        arr.push_back(v);
      }
    }
    series[c.name] = std::move(arr);
  }
  nlohmann::json out{{"metadata", meta}, {"snr_db", snr_db}, {"series", series}};
  os << out.dump(2) << "\n";
}

AserCurve compute_curve(const RunConfig& cfg, std::ostream& warnings) {
  AserCurve curve;
  curve.snr_db = cfg.grid.points();
  curve.config_echo = cfg.echo_json;
  curve.seed = cfg.mc.seed;
  curve.version = kVersion;
  if (cfg.timestamp) curve.timestamp = utc_now();
  if (cfg.phase_defaulted)
    curve.phase_note = "0 (defaulted; the experiment descriptions leave it unstated)";

  const bool channel_dependent = cfg.strategy.kind == relay::RelayKind::channel_dependent;
  const bool wants_asymptotic =
      std::count(cfg.methods.begin(), cfg.methods.end(), Method::asymptotic) > 0;
  if (wants_asymptotic && channel_dependent) {
    // surface parameter-level validity early (Gamma-Gamma beta > 1 etc.) as a
    // request error rather than a per-point numerical failure
    try {
      (void)asymptotics::asymptotic_report(cfg.link_budget(cfg.grid.start_db),
                                           cfg.modulations.front());
    } catch (const Error& e) {
      throw ConfigError(e.what());
    }
  }

  const auto families = analytics::MalagaMeijerFamilies::build(cfg.malaga);
  const std::size_t npts = curve.snr_db.size();

  struct ColumnPlan {
    analytics::Modulation mod;
    Method method;
  };
  std::vector<ColumnPlan> plan;
  static const Method kOrder[] = {Method::exact, Method::approx, Method::asymptotic,
                                  Method::mc};
  for (const auto& mod : cfg.modulations) {
    for (Method m : kOrder) {
      if (!std::count(cfg.methods.begin(), cfg.methods.end(), m)) continue;
      if (!method_applies(m, mod)) continue;
      plan.push_back(ColumnPlan{mod, m});
    }
  }

  for (const auto& p : plan)
    curve.columns.push_back(
        {p.mod.name() + "_" + method_name(p.method), std::vector<double>(npts, kNaN)});
  const bool has_mc = std::count(cfg.methods.begin(), cfg.methods.end(), Method::mc) > 0;
  std::vector<std::size_t> ci_low_index(cfg.modulations.size(), 0);
  std::vector<std::size_t> ci_high_index(cfg.modulations.size(), 0);
  if (has_mc) {
    for (std::size_t mi = 0; mi < cfg.modulations.size(); ++mi) {
      ci_low_index[mi] = curve.columns.size();
      curve.columns.push_back(
          {cfg.modulations[mi].name() + "_mc_lo", std::vector<double>(npts, kNaN)});
      ci_high_index[mi] = curve.columns.size();
      curve.columns.push_back(
          {cfg.modulations[mi].name() + "_mc_hi", std::vector<double>(npts, kNaN)});
    }
  }

  std::mutex warn_mutex;
  auto warn = [&](const std::string& msg) {
    std::lock_guard<std::mutex> lock(warn_mutex);
    warnings << "warning: " << msg << "\n";
    curve.failed_points = true;
  };

  // analytic columns: parallel over grid points; deterministic since each
  // point writes its own slot
  support::parallel_for(npts, [&](std::size_t pi) {
    const double snr = curve.snr_db[pi];
    const auto lb = cfg.link_budget(snr);
    std::unique_ptr<analytics::FixedGainAnalytics> fixed;
    std::unique_ptr<analytics::ChannelDependentAnalytics> cd;
    auto eval_analytic = [&](const ColumnPlan& p) -> double {
      if (p.method == Method::asymptotic) {
        if (!channel_dependent)
          return asymptotics::aser_asymptotic_fixed(p.mod, lb.rf.gamma_bar);
        return asymptotics::aser_asymptotic_channel_dependent(p.mod, cfg.malaga,
                                                              lb.fso.gamma_bar);
      }
      if (!channel_dependent) {
        if (!fixed)
          fixed = std::make_unique<analytics::FixedGainAnalytics>(
              lb, numerics::QuadratureSettings{}, families);
        if (p.method == Method::approx) return fixed->aser_mpsk_approx(p.mod);
        if (p.mod.is_mpsk()) return fixed->aser_mpsk_exact(p.mod);
        return fixed->aser_dpsk_ncfsk(p.mod);
      }
      if (!cd)
        cd = std::make_unique<analytics::ChannelDependentAnalytics>(
            lb, numerics::QuadratureSettings{}, families);
      if (p.method == Method::approx) return cd->aser_mpsk_approx(p.mod);
      if (p.mod.is_mpsk()) return cd->aser_mpsk_exact(p.mod);
      return cd->aser_dpsk_ncfsk(p.mod);
    };
    for (std::size_t c = 0; c < plan.size(); ++c) {
      if (plan[c].method == Method::mc) continue;
      try {
        curve.columns[c].values[pi] = eval_analytic(plan[c]);
      } catch (const Error& e) {
        warn(curve.columns[c].name + " at " + format_double(snr) + " dB: " + e.what());
      }
    }
  });

  // Monte Carlo columns: sequential over points (block-parallel inside); the
  // same seed at every point gives common random numbers across the sweep
  if (has_mc) {
    for (std::size_t pi = 0; pi < npts; ++pi) {
      const auto lb = cfg.link_budget(curve.snr_db[pi]);
      for (std::size_t c = 0; c < plan.size(); ++c) {
        if (plan[c].method != Method::mc) continue;
        const std::size_t mi =
            std::distance(cfg.modulations.begin(),
                          std::find_if(cfg.modulations.begin(), cfg.modulations.end(),
                                       [&](const analytics::Modulation& m) {
                                         return m.name() == plan[c].mod.name();
                                       }));
        try {
          const auto est = simulate::estimate_aser(lb, plan[c].mod, cfg.mc);
          curve.columns[c].values[pi] = est.mean;
          curve.columns[ci_low_index[mi]].values[pi] = est.ci_low;
          curve.columns[ci_high_index[mi]].values[pi] = est.ci_high;
        } catch (const Error& e) {
          warn(curve.columns[c].name + " at " + format_double(curve.snr_db[pi]) +
               " dB: " + e.what());
        }
      }
    }
  }
  return curve;
}

}  // namespace rfso::cli
