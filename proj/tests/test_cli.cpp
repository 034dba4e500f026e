#include <doctest.h>

#include <cmath>
#include <sstream>

#include "oracles.hpp"
#include "rfso/cli/commands.hpp"
#include "rfso/cli/curve.hpp"
#include "rfso/cli/run_config.hpp"
#include "rfso/errors.hpp"

using namespace rfso;
using namespace rfso::cli;

namespace {

RunConfig small_config(const std::string& extra = "") {
  const std::string text = R"({
    "channel": {"model": "malaga", "alpha": 10, "beta": 5, "rho": 0.5, "b0": 0.25},
    "strategy": {"kind": "fixed_gain", "c": 0.5},
    "modulations": ["bpsk"],
    "grid": {"start_db": 0, "stop_db": 10, "step_db": 5},
    "methods": ["exact"],
    "mc": {"samples": 20000, "seed": 7},
    "output": {"path": "-", "format": "csv", "timestamp": false}
  )" + extra + "}";
  return RunConfig::from_json_text(text);
}

}  // namespace

TEST_CASE("dB conversion uses the power convention exactly") {
  CHECK(db_to_linear(20.0) == 100.0);
  CHECK(db_to_linear(0.0) == 1.0);
  CHECK(linear_to_db(1000.0) == doctest::Approx(30.0).epsilon(1e-14));
}

TEST_CASE("config round-trips through its canonical echo") {
  const auto cfg = small_config();
  const auto again = RunConfig::from_json_text(cfg.echo_json);
  CHECK(again.to_json_text() == cfg.echo_json);
  CHECK(again.malaga.alpha() == cfg.malaga.alpha());
  CHECK(again.grid.step_db == cfg.grid.step_db);
  CHECK(again.mc.seed == cfg.mc.seed);

  const auto defaults = RunConfig::defaults();
  const auto rt = RunConfig::from_json_text(defaults.echo_json);
  CHECK(rt.to_json_text() == defaults.echo_json);
}

TEST_CASE("config validation failures") {
  CHECK_THROWS_AS(RunConfig::from_json_text("not json"), ConfigError);
  CHECK_THROWS_AS(RunConfig::from_json_text(R"({"methods": []})"), ConfigError);
  CHECK_THROWS_AS(RunConfig::from_json_text(R"({"modulations": []})"), ConfigError);
  CHECK_THROWS_AS(RunConfig::from_json_text(R"({"modulations": ["qam64"]})"), ConfigError);
  CHECK_THROWS_AS(
      RunConfig::from_json_text(R"({"channel": {"model": "k", "alpha": 4.0}})"),
      ConfigError);
  CHECK_THROWS_AS(
      RunConfig::from_json_text(R"({"grid": {"start_db": 10, "stop_db": 0, "step_db": 1}})"),
      ConfigError);
}

TEST_CASE("omega defaults to the unit-optical-power convention") {
  const auto cfg = small_config();
  CHECK(cfg.malaga.omega() == doctest::Approx(0.5).epsilon(1e-15));
  CHECK(cfg.malaga.phase_diff() == 0.0);
  CHECK(cfg.phase_defaulted);
}

TEST_CASE("curve CSV: exact header, deterministic bytes, parsable floats") {
  auto cfg = small_config();
  cfg.methods = {Method::exact, Method::mc};
  std::ostringstream err;
  const auto curve = compute_curve(cfg, err);
  CHECK(!curve.failed_points);

  std::ostringstream a, b;
  curve.write_csv(a);
  const auto curve2 = compute_curve(cfg, err);
  curve2.write_csv(b);
  CHECK(a.str() == b.str());

  std::istringstream in(a.str());
  std::string line;
  // skip comment block
  while (std::getline(in, line) && line.rfind('#', 0) == 0) {
  }
  CHECK(line == "snr_db,bpsk_exact,bpsk_mc,bpsk_mc_lo,bpsk_mc_hi");
  std::size_t rows = 0;
  while (std::getline(in, line)) {
    ++rows;
    std::stringstream fields(line);
    std::string cell;
    while (std::getline(fields, cell, ',')) {
      CHECK(std::isfinite(std::strtod(cell.c_str(), nullptr)));
    }
  }
  CHECK(rows == 3);  // 0, 5, 10 dB
}

TEST_CASE("curve JSON metadata round-trips the config") {
  auto cfg = small_config();
  cfg.format = OutputFormat::json;
  std::ostringstream err, out;
  const auto curve = compute_curve(cfg, err);
  curve.write_json(out);
  // the embedded config echo reparses to an equivalent run configuration
  const auto pos = out.str().find("\"config\"");
  CHECK(pos != std::string::npos);
  const auto reparsed = RunConfig::from_json_text(curve.config_echo);
  CHECK(reparsed.to_json_text() == cfg.echo_json);
}

TEST_CASE("cmd_curve writes NaN cells and signals failure for bad points") {
  // a channel-dependent sweep asking for the asymptotic method on a
  // Gamma-Gamma channel is rejected up front as a configuration error
  const std::string text = R"({
    "channel": {"model": "gamma_gamma", "alpha": 4.2, "beta": 2},
    "strategy": {"kind": "channel_dependent"},
    "modulations": ["dpsk"],
    "grid": {"start_db": 0, "stop_db": 10, "step_db": 5},
    "methods": ["asymptotic"],
    "output": {"path": "-", "timestamp": false}
  })";
  const auto cfg = RunConfig::from_json_text(text);
  std::ostringstream out, err;
  CHECK(cmd_curve(cfg, out, err) == kExitUsage);
}

TEST_CASE("cmd_gap prints the frozen constants") {
  const auto cfg = RunConfig::defaults();
  std::ostringstream out, err;
  GapOptions opts;
  opts.from = "bpsk";
  opts.to = "dpsk";
  CHECK(cmd_gap(cfg, opts, out, err) == kExitOk);
  const std::string table = out.str();
  CHECK(table.find("2.6626788") != std::string::npos);
  CHECK(table.find("3.0102999") != std::string::npos);
  CHECK(table.find("4.4416178") != std::string::npos);

  std::ostringstream out2, err2;
  GapOptions qpsk;
  qpsk.from = "bpsk";
  qpsk.to = "qpsk";
  qpsk.strategy = "fixed";
  CHECK(cmd_gap(cfg, qpsk, out2, err2) == kExitOk);
  CHECK(out2.str().find("5.295093") != std::string::npos);

  // channel-dependent request on a Gamma-Gamma channel is refused
  const auto gg = RunConfig::from_json_text(
      R"({"channel": {"model": "gamma_gamma", "alpha": 4.2, "beta": 2}})");
  std::ostringstream out3, err3;
  GapOptions cd;
  cd.strategy = "channel_dependent";
  CHECK(cmd_gap(gg, cd, out3, err3) == kExitNumerical);
  CHECK(err3.str().find("does not converge") != std::string::npos);

  std::ostringstream out4, err4;
  GapOptions bad;
  bad.from = "dpsk";
  CHECK(cmd_gap(cfg, bad, out4, err4) == kExitUsage);
}

TEST_CASE("cmd_diversity fits the fixed-gain slope near one") {
  const std::string text = R"({
    "channel": {"model": "malaga", "alpha": 10, "beta": 5, "rho": 0.75, "b0": 0.25},
    "strategy": {"kind": "fixed_gain", "c": 0.5},
    "modulations": ["bpsk"],
    "grid": {"start_db": 30, "stop_db": 40, "step_db": 2.5},
    "methods": ["exact"],
    "output": {"path": "-", "timestamp": false}
  })";
  const auto cfg = RunConfig::from_json_text(text);
  std::ostringstream out, err;
  CHECK(cmd_diversity(cfg, DiversityOptions{30.0, 40.0}, out, err) == kExitOk);
  std::istringstream lines(out.str());
  std::string header, row;
  std::getline(lines, header);
  std::getline(lines, row);
  CHECK(header == "modulation,window_db,slope,note");
  const auto first = row.find(',');
  const auto second = row.find(',', first + 1);
  const auto third = row.find(',', second + 1);
  const double slope = std::strtod(row.substr(second + 1, third - second - 1).c_str(), nullptr);
  CHECK(std::abs(slope - 1.0) <= 0.05);

  std::ostringstream out2, err2;
  CHECK(cmd_diversity(cfg, DiversityOptions{45.0, 50.0}, out2, err2) == kExitUsage);
}

TEST_CASE("cmd_validate passes on a sound config and fails when corrupted") {
  auto cfg = small_config();
  cfg.mc.samples = 50'000;
  std::ostringstream out, err;
  CHECK(cmd_validate(cfg, ValidateOptions{}, out, err) == kExitOk);
  CHECK(out.str().find("all checks passed") != std::string::npos);

  std::ostringstream out2, err2;
  ValidateOptions forced;
  forced.force_fail = true;
  CHECK(cmd_validate(cfg, forced, out2, err2) == kExitNumerical);
  CHECK(out2.str().find("FAIL") != std::string::npos);

  // a K-reduction config exercises the dedicated-formula equivalence line
  const auto kcfg = RunConfig::from_json_text(R"({
    "channel": {"model": "k", "alpha": 4.2, "b0": 0.25},
    "modulations": ["bpsk"],
    "grid": {"start_db": 0, "stop_db": 20, "step_db": 10},
    "methods": ["exact"],
    "mc": {"samples": 50000, "seed": 3}
  })");
  std::ostringstream out3, err3;
  CHECK(cmd_validate(kcfg, ValidateOptions{}, out3, err3) == kExitOk);
  CHECK(out3.str().find("special-case-equivalence") != std::string::npos);
}

TEST_CASE("cmd_sample emits deterministic positive draws") {
  auto cfg = small_config();
  SampleOptions opts;
  opts.count = 10;
  opts.kind = "irradiance";
  std::ostringstream out1, out2, err;
  CHECK(cmd_sample(cfg, opts, out1, err) == kExitOk);
  CHECK(cmd_sample(cfg, opts, out2, err) == kExitOk);
  CHECK(out1.str() == out2.str());
  std::istringstream lines(out1.str());
  std::string line;
  std::size_t n = 0;
  while (std::getline(lines, line)) {
    ++n;
    CHECK(std::strtod(line.c_str(), nullptr) > 0.0);
  }
  CHECK(n == 10);

  SampleOptions snr;
  snr.count = 5;
  snr.kind = "snr";
  std::ostringstream out3;
  CHECK(cmd_sample(cfg, snr, out3, err) == kExitOk);

  SampleOptions bad;
  bad.count = 0;
  std::ostringstream out4, err4;
  CHECK(cmd_sample(cfg, bad, out4, err4) == kExitUsage);
}
