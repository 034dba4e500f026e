// Command line front end: curve / gap / diversity / validate / sample.

#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "rfso/cli/commands.hpp"
#include "rfso/cli/run_config.hpp"
#include "rfso/errors.hpp"
#include "rfso/version.hpp"

namespace {

struct CommonFlags {
  std::string config_path;
  std::optional<std::uint64_t> seed;
  std::string out_path;
  std::string format;
  std::string methods;
  bool no_timestamp = false;
};

void add_common(CLI::App* cmd, CommonFlags& flags) {
  cmd->add_option("--config", flags.config_path, "JSON run configuration file");
  cmd->add_option("--seed", flags.seed, "Monte Carlo seed (overrides the config)");
  cmd->add_option("--out", flags.out_path, "output path ('-' = stdout)");
  cmd->add_option("--format", flags.format, "output format: csv|json")
      ->check(CLI::IsMember({"csv", "json"}));
  cmd->add_option("--methods", flags.methods,
                  "comma-separated methods subset: exact,approx,asymptotic,mc");
  cmd->add_flag("--no-timestamp", flags.no_timestamp,
                "omit the generated-at line so reruns are byte-identical");
}

rfso::cli::RunConfig resolve_config(const CommonFlags& flags) {
  using rfso::cli::RunConfig;
  RunConfig cfg = flags.config_path.empty() ? RunConfig::defaults()
                                            : RunConfig::from_file(flags.config_path);
  if (flags.seed) cfg.mc.seed = *flags.seed;
  if (!flags.out_path.empty()) cfg.out_path = flags.out_path;
  if (!flags.format.empty())
    cfg.format = flags.format == "json" ? rfso::cli::OutputFormat::json
                                        : rfso::cli::OutputFormat::csv;
  if (flags.no_timestamp) cfg.timestamp = false;
  if (!flags.methods.empty()) {
    cfg.methods.clear();
    std::string item;
    std::stringstream ss(flags.methods);
    while (std::getline(ss, item, ',')) {
      if (item.empty()) continue;
      auto m = rfso::cli::parse_method(item);
      if (!m) throw rfso::ConfigError("unknown method '" + item + "'");
      cfg.methods.push_back(*m);
    }
    if (cfg.methods.empty()) throw rfso::ConfigError("methods list must not be empty");
  }
  cfg.echo_json = cfg.to_json_text();
  return cfg;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"dual-hop RF/FSO relay ASER analysis"};
  app.set_version_flag("--version", std::string("rfso ") + rfso::kVersion);
  app.require_subcommand(1);

  CommonFlags curve_flags, gap_flags, div_flags, val_flags, sample_flags;

  auto* curve = app.add_subcommand("curve", "sweep an SNR grid and emit an ASER table");
  add_common(curve, curve_flags);

  auto* gap = app.add_subcommand("gap", "asymptotic SNR gaps between modulation schemes");
  add_common(gap, gap_flags);
  rfso::cli::GapOptions gap_opts;
  std::string pair = "bpsk:dpsk";
  gap->add_option("--pair", pair, "modulation pair, e.g. bpsk:dpsk or bpsk:qpsk");
  gap->add_option("--strategy", gap_opts.strategy, "fixed | channel_dependent | both")
      ->check(CLI::IsMember({"fixed", "channel_dependent", "cd", "both"}));

  auto* diversity = app.add_subcommand("diversity", "fit log-log ASER slopes over a window");
  add_common(diversity, div_flags);
  std::string window = "30:40";
  diversity->add_option("--window", window, "fit window in dB, formatted lo:hi");

  auto* validate = app.add_subcommand("validate", "run the cross-validation suite");
  add_common(validate, val_flags);
  rfso::cli::ValidateOptions val_opts;
  validate->add_flag("--force-fail", val_opts.force_fail,
                     "test hook: corrupt one tolerance so the suite fails");

  auto* sample = app.add_subcommand("sample", "emit raw deterministic draws, one per line");
  add_common(sample, sample_flags);
  rfso::cli::SampleOptions sample_opts;
  sample->add_option("-n,--count", sample_opts.count, "number of draws");
  sample->add_option("--kind", sample_opts.kind, "irradiance | snr")
      ->check(CLI::IsMember({"irradiance", "snr"}));

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int rc = app.exit(e);
    return rc == 0 ? 0 : rfso::cli::kExitUsage;
  }

  try {
    if (curve->parsed()) {
      return rfso::cli::cmd_curve(resolve_config(curve_flags), std::cout, std::cerr);
    }
    if (gap->parsed()) {
      const auto sep = pair.find(':');
      if (sep == std::string::npos) {
        std::cerr << "error: --pair expects the form a:b\n";
        return rfso::cli::kExitUsage;
      }
      gap_opts.from = pair.substr(0, sep);
      gap_opts.to = pair.substr(sep + 1);
      return rfso::cli::cmd_gap(resolve_config(gap_flags), gap_opts, std::cout, std::cerr);
    }
    if (diversity->parsed()) {
      rfso::cli::DiversityOptions opts;
      const auto sep = window.find(':');
      if (sep == std::string::npos) {
        std::cerr << "error: --window expects the form lo:hi\n";
        return rfso::cli::kExitUsage;
      }
      opts.window_lo_db = std::stod(window.substr(0, sep));
      opts.window_hi_db = std::stod(window.substr(sep + 1));
      return rfso::cli::cmd_diversity(resolve_config(div_flags), opts, std::cout, std::cerr);
    }
    if (validate->parsed()) {
      val_opts.report_path = val_flags.out_path;
      auto cfg = resolve_config(val_flags);
      cfg.out_path.clear();  // report goes through --out; stdout carries the lines
      return rfso::cli::cmd_validate(cfg, val_opts, std::cout, std::cerr);
    }
    if (sample->parsed()) {
      return rfso::cli::cmd_sample(resolve_config(sample_flags), sample_opts, std::cout,
                                   std::cerr);
    }
  } catch (const rfso::ConfigError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return rfso::cli::kExitUsage;
  } catch (const rfso::Error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return rfso::cli::kExitNumerical;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return rfso::cli::kExitNumerical;
  }
  return rfso::cli::kExitUsage;
}
