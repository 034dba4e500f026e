#include "rfso/cli/run_config.hpp"

#include <cmath>
#include <fstream>
#include <sstream>

#include <json.hpp>

#include "rfso/errors.hpp"

namespace rfso::cli {

using nlohmann::json;

double db_to_linear(double db) { return std::pow(10.0, db / 10.0); }
double linear_to_db(double linear) { return 10.0 * std::log10(linear); }

const char* method_name(Method m) {
  switch (m) {
    case Method::exact: return "exact";
    case Method::approx: return "approx";
    case Method::asymptotic: return "asymptotic";
    case Method::mc: return "mc";
  }
  return "?";
}

std::optional<Method> parse_method(std::string_view name) {
  if (name == "exact") return Method::exact;
  if (name == "approx") return Method::approx;
  if (name == "asymptotic") return Method::asymptotic;
  if (name == "mc") return Method::mc;
  return std::nullopt;
}

std::vector<double> GridSpec::points() const {
  if (!(step_db > 0) || stop_db < start_db)
    throw ConfigError("grid: need step_db > 0 and stop_db >= start_db");
  std::vector<double> out;
  const int n = static_cast<int>(std::floor((stop_db - start_db) / step_db + 1e-9));
  out.reserve(n + 1);
  for (int i = 0; i <= n; ++i) out.push_back(start_db + i * step_db);
  return out;
}

namespace {

channel::MalagaParams parse_channel(const json& j, std::string& model_out,
                                    bool& phase_defaulted) {
  const std::string model = j.value("model", "malaga");
  model_out = model;
  phase_defaulted = !j.contains("phase_diff");
  if (model == "k") {
    if (!j.contains("alpha") || !j.contains("b0"))
      throw ConfigError("channel: the K model needs alpha and b0");
    return channel::make_k_distribution(j.at("alpha").get<double>(),
                                        j.at("b0").get<double>());
  }
  if (model == "gamma_gamma") {
    if (!j.contains("alpha") || !j.contains("beta"))
      throw ConfigError("channel: the gamma_gamma model needs alpha and beta");
    return channel::make_gamma_gamma(j.at("alpha").get<double>(), j.at("beta").get<int>());
  }
  if (model != "malaga") throw ConfigError("channel: unknown model '" + model + "'");
  if (!j.contains("alpha") || !j.contains("beta") || !j.contains("rho") || !j.contains("b0"))
    throw ConfigError("channel: the malaga model needs alpha, beta, rho, b0");
  const double b0 = j.at("b0").get<double>();
  const double omega = j.value("omega", 1.0 - 2.0 * b0);  // unit optical power default
  if (omega < 0)
    throw ConfigError("channel: omega defaulted to 1-2*b0 is negative; set omega explicitly");
  return channel::MalagaParams::create(j.at("alpha").get<double>(), j.at("beta").get<int>(),
                                       j.at("rho").get<double>(), b0, omega,
                                       j.value("phase_diff", 0.0));
}

}  // namespace

RunConfig RunConfig::defaults() {
  RunConfig cfg;
  cfg.channel_model = "malaga";
  cfg.malaga = channel::MalagaParams::create(10.0, 5, 0.5, 0.25, 0.5, 0.0);
  cfg.strategy = relay::RelayStrategy::fixed_gain(0.5);
  cfg.modulations = {analytics::Modulation::mpsk(2), analytics::Modulation::mpsk(4),
                     analytics::Modulation::mpsk(8)};
  cfg.grid = GridSpec{0.0, 40.0, 1.0};
  cfg.link = LinkSpec{};
  cfg.methods = {Method::exact, Method::approx, Method::mc};
  cfg.mc = simulate::McConfig{};
  cfg.format = OutputFormat::csv;
  cfg.echo_json = cfg.to_json_text();
  return cfg;
}

RunConfig RunConfig::from_json_text(const std::string& text) {
  json j;
  try {
    j = json::parse(text);
  } catch (const json::exception& e) {
    throw ConfigError(std::string("config: invalid JSON: ") + e.what());
  }
  RunConfig cfg;
  try {
    cfg.malaga = parse_channel(j.value("channel", json::object()), cfg.channel_model,
                               cfg.phase_defaulted);
    if (j.contains("strategy")) {
      const auto& s = j.at("strategy");
      const std::string kind = s.value("kind", "fixed_gain");
      if (kind == "fixed_gain") {
        cfg.strategy = relay::RelayStrategy::fixed_gain(s.value("c", 0.5));
      } else if (kind == "channel_dependent") {
        cfg.strategy = relay::RelayStrategy::channel_dependent();
      } else {
        throw ConfigError("strategy: unknown kind '" + kind + "'");
      }
    }
    cfg.modulations.clear();
    for (const auto& name : j.value("modulations", json::array({"bpsk", "qpsk", "8psk"}))) {
      auto mod = analytics::Modulation::parse(name.get<std::string>());
      if (!mod) throw ConfigError("modulations: unknown scheme '" + name.get<std::string>() + "'");
      cfg.modulations.push_back(*mod);
    }
    if (cfg.modulations.empty()) throw ConfigError("modulations: list must not be empty");
    if (j.contains("grid")) {
      const auto& g = j.at("grid");
      cfg.grid.start_db = g.value("start_db", 0.0);
      cfg.grid.stop_db = g.value("stop_db", 40.0);
      cfg.grid.step_db = g.value("step_db", 1.0);
    }
    if (cfg.grid.points().empty()) throw ConfigError("grid: empty");
    if (j.contains("link")) {
      const auto& l = j.at("link");
      const std::string mode = l.value("mode", "equal");
      if (mode == "equal") {
        cfg.link = LinkSpec{LinkMode::equal, 0.0};
      } else if (mode == "fixed_rf") {
        cfg.link = LinkSpec{LinkMode::fixed_rf, l.at("gamma1_db").get<double>()};
      } else if (mode == "offset") {
        cfg.link = LinkSpec{LinkMode::offset, l.at("delta_db").get<double>()};
      } else {
        throw ConfigError("link: unknown mode '" + mode + "'");
      }
    }
    cfg.methods.clear();
    for (const auto& name : j.value("methods", json::array({"exact", "approx", "mc"}))) {
      auto m = parse_method(name.get<std::string>());
      if (!m) throw ConfigError("methods: unknown method '" + name.get<std::string>() + "'");
      cfg.methods.push_back(*m);
    }
    if (cfg.methods.empty()) throw ConfigError("methods: list must not be empty");
    if (j.contains("mc")) {
      const auto& m = j.at("mc");
      cfg.mc.samples = m.value("samples", std::size_t{1'000'000});
      cfg.mc.seed = m.value("seed", cfg.mc.seed);
      cfg.mc.chunk_size = m.value("chunk_size", std::size_t{4096});
      cfg.mc.confidence_level = m.value("confidence_level", 0.997);
      cfg.mc.chunk_size = std::min(cfg.mc.chunk_size, cfg.mc.samples);
      cfg.mc.validate();
    }
    if (j.contains("output")) {
      const auto& o = j.at("output");
      cfg.out_path = o.value("path", "");
      const std::string fmt = o.value("format", "csv");
      if (fmt == "csv") {
        cfg.format = OutputFormat::csv;
      } else if (fmt == "json") {
        cfg.format = OutputFormat::json;
      } else {
        throw ConfigError("output: unknown format '" + fmt + "'");
      }
      cfg.timestamp = o.value("timestamp", true);
    }
  } catch (const json::exception& e) {
    throw ConfigError(std::string("config: ") + e.what());
  }
  cfg.echo_json = cfg.to_json_text();
  return cfg;
}

RunConfig RunConfig::from_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw ConfigError("config: cannot open '" + path + "'");
  std::stringstream ss;
  ss << in.rdbuf();
  return from_json_text(ss.str());
}

std::string RunConfig::to_json_text() const {
  json ch;
  ch["model"] = channel_model;
  ch["alpha"] = malaga.alpha();
  ch["beta"] = malaga.beta();
  ch["rho"] = malaga.rho();
  ch["b0"] = malaga.b0();
  ch["omega"] = malaga.omega();
  ch["phase_diff"] = malaga.phase_diff();
  json strat;
  strat["kind"] =
      strategy.kind == relay::RelayKind::fixed_gain ? "fixed_gain" : "channel_dependent";
  if (strategy.kind == relay::RelayKind::fixed_gain) strat["c"] = strategy.c;
  json mods = json::array();
  for (const auto& m : modulations) mods.push_back(m.name());
  json methods_j = json::array();
  for (auto m : methods) methods_j.push_back(method_name(m));
  json link_j;
  switch (link.mode) {
    case LinkMode::equal: link_j["mode"] = "equal"; break;
    case LinkMode::fixed_rf:
      link_j["mode"] = "fixed_rf";
      link_j["gamma1_db"] = link.value_db;
      break;
    case LinkMode::offset:
      link_j["mode"] = "offset";
      link_j["delta_db"] = link.value_db;
      break;
  }
  json out{{"channel", ch},
           {"strategy", strat},
           {"modulations", mods},
           {"grid", {{"start_db", grid.start_db}, {"stop_db", grid.stop_db}, {"step_db", grid.step_db}}},
           {"link", link_j},
           {"methods", methods_j},
           {"mc",
            {{"samples", mc.samples},
             {"seed", mc.seed},
             {"chunk_size", mc.chunk_size},
             {"confidence_level", mc.confidence_level}}},
           {"output",
            {{"path", out_path},
             {"format", format == OutputFormat::csv ? "csv" : "json"},
             {"timestamp", timestamp}}}};
  return out.dump();
}

double RunConfig::gamma1_at(double grid_snr_db) const {
  switch (link.mode) {
    case LinkMode::equal: return db_to_linear(grid_snr_db);
    case LinkMode::fixed_rf: return db_to_linear(link.value_db);
    case LinkMode::offset: return db_to_linear(grid_snr_db + link.value_db);
  }
  return db_to_linear(grid_snr_db);
}

double RunConfig::gamma2_at(double grid_snr_db) const { return db_to_linear(grid_snr_db); }

analytics::LinkBudget RunConfig::link_budget(double grid_snr_db) const {
  return analytics::LinkBudget{
      channel::RayleighParams::create(gamma1_at(grid_snr_db)),
      channel::FsoSnrParams::create(malaga, gamma2_at(grid_snr_db)), strategy};
}

}  // namespace rfso::cli
